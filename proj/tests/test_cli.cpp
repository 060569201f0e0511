#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "lassokit/cli.hpp"
#include "lassokit/extraction.hpp"
#include "lassokit/lasso_automaton.hpp"
#include "lassokit/omega.hpp"
#include "support.hpp"

using namespace lassokit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    /// Last non-empty output line.
    [[nodiscard]] std::string last() const {
        std::istringstream in(out);
        std::string line, keep;
        while (std::getline(in, line))
            if (!line.empty()) keep = line;
        return keep;
    }
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lassokit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LASSOKIT_TEST_DATA) + "/" + name; }

const Alphabet ab("ab");

}  // namespace

TEST_CASE("member") {
    auto r = cli({"member", "--lexp", "b(a*b@)", "--lasso", "ba:b"});
    CHECK(r.code == 0);
    CHECK(r.last() == "yes");
    r = cli({"member", "--lexp", "b(a*b@)", "--lasso", "b:ab"});
    CHECK(r.code == 1);
    CHECK(r.last() == "no");
    CHECK(cli({"member", "--rexp", "(ab)*", "--word", "1"}).code == 0);
    CHECK(cli({"member", "--rexp", "(ab)*", "--word", "aba"}).code == 1);
    CHECK(cli({"member", "--oexp", "(a+b)*a$", "--lasso", ":aa"}).code == 0);
    CHECK(cli({"member", "--oexp", "(a+b)*a$", "--lasso", ":ab"}).code == 1);
}

TEST_CASE("normal forms and lasso equivalence") {
    auto r = cli({"nf", "aba:baba"});
    CHECK(r.code == 0);
    CHECK(r.last() == ":ab");
    CHECK(cli({"equiv-lasso", ":b", "b:b"}).code == 0);
    r = cli({"equiv-lasso", ":ab", ":ba"});
    CHECK(r.code == 1);
    CHECK(r.last() == "no :ab :ba");
    r = cli({"equiv-lasso", "--files", data("a_then_ba.lauto"), data("ends_in_a.lauto")});
    CHECK(r.code == 1);
    const auto lib = equivalent_lasso(testing::load("a_then_ba.lauto"), testing::load("ends_in_a.lauto"));
    CHECK(r.last() == "no " + lib.counterexample->to_string());
}

TEST_CASE("saturation") {
    auto r = cli({"saturated", data("a_then_ba.lauto")});
    CHECK(r.code == 1);
    CHECK(r.last() == "no :b b:b");
    r = cli({"saturated", data("ends_in_a.lauto")});
    CHECK(r.code == 0);
    CHECK(r.last() == "yes");
}

TEST_CASE("extraction output parses back to the library result") {
    auto r = cli({"extract", data("b_ab_ab.lauto")});
    CHECK(r.code == 0);
    const auto A = testing::load("b_ab_ab.lauto");
    CHECK(r.last() == extract_df(A).to_string());
    const auto back = parse_lexp(r.last(), ab);
    CHECK(equivalent_lasso(compile_lasso(back, ab), A).equivalent);

    r = cli({"extract-omega", data("ends_in_a.lauto")});
    CHECK(r.code == 0);
    CHECK(parse_oexp(r.last(), ab) == extract_omega_expr(testing::load("ends_in_a.lauto")));
    CHECK(cli({"extract-omega", data("a_then_ba.lauto")}).code == 2);
}

TEST_CASE("conversions") {
    auto r = cli({"convert", "(a+b)*a$"});
    CHECK(r.code == 0);
    const auto df = represent(parse_oexp("(a+b)*a$", ab), ab);
    CHECK(r.last() == df.to_string());
    CHECK(disjunctive_form(parse_lexp(r.last(), ab)).to_string() == df.to_string());

    r = cli({"convert", "a$", "--to", "automaton", "--alphabet", "ab"});
    CHECK(r.code == 0);
    const auto A = read_automaton(r.out);
    CHECK(write_automaton(A) == write_automaton(omega_to_omega_automaton(parse_oexp("a$", ab), ab)));

    r = cli({"compile", "--lexp", "b(ab)*(ab*)@"});
    CHECK(r.code == 0);
    CHECK(equivalent_lasso(read_automaton(r.out), testing::load("b_ab_ab.lauto")).equivalent);

    r = cli({"compile", "--rexp", "ab*"});
    CHECK(r.code == 0);
    CHECK(equivalent_dfa(read_dfa(r.out), compile_dfa(parse_rexp("ab*", ab), ab)).equivalent);
}

TEST_CASE("split, root and enumerate") {
    auto r = cli({"split", "b(a+b*)"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) n += !line.empty();
    CHECK(n == split(parse_rexp("b(a+b*)", ab)).size());

    r = cli({"root", "aa"});
    CHECK(r.code == 0);
    const Alphabet a1("a");
    CHECK(equivalent_dfa(compile_dfa(parse_rexp(r.last(), a1), a1), root(compile_dfa(parse_rexp("aa", a1), a1)))
              .equivalent);
    CHECK(r.err.find("inferred") != std::string::npos);

    r = cli({"enumerate", "--rexp", "(ab)*", "--max-len", "4"});
    CHECK(r.out == "1\nab\nabab\n");
    r = cli({"enumerate", "--lexp", "b(a*b@)", "--max-spoke", "2", "--max-loop", "1"});
    CHECK(r.out == "b:b\nba:b\n");
    r = cli({"enumerate", "--automaton", data("a_then_ba.lauto"), "--max-spoke", "1", "--max-loop", "1"});
    CHECK(r.out == ":b\na:b\n");
}

TEST_CASE("dot output and files") {
    auto r = cli({"dot", "--automaton", data("a_then_ba.lauto")});
    CHECK(r.code == 0);
    CHECK(r.out == to_dot(testing::load("a_then_ba.lauto")));
    CHECK(cli({"dot", "--rexp", "ab*"}).out.find("digraph") != std::string::npos);

    const auto path = std::filesystem::temp_directory_path() / "lassokit_cli_test.lauto";
    r = cli({"compile", "--lexp", "b(a*b@)", "-o", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(equivalent_lasso(read_automaton(text.str()), testing::load("b_as_b.lauto")).equivalent);
    std::filesystem::remove(path);
}

TEST_CASE("errors exit with 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"member", "--rexp", "a(", "--word", "a"}).code == 2);
    CHECK(cli({"member", "--lexp", "(ab)*@", "--lasso", "a:b"}).code == 2);
    CHECK(cli({"nf", "ab:"}).code == 2);
    CHECK(cli({"saturated", data("missing.lauto")}).code == 2);
    CHECK(cli({"member", "--rexp", "a", "--word", "a", "--alphabet", "b"}).code == 2);
    auto r = cli({"member", "--rexp", "a+", "--word", "a"});
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
    const std::vector<std::vector<std::string>> calls = {
        {"convert", "(aa)$+b(ab)$"},
        {"saturated", data("a_then_ba.lauto")},
        {"extract", data("b_as_b.lauto")},
        {"split", "(a+b)*a"},
    };
    for (const auto& c : calls) {
        auto first = cli(c), second = cli(c);
        CHECK(first.out == second.out);
        CHECK(first.code == second.code);
    }
}
