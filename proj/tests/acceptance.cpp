// Acceptance checks: one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lassokit/extraction.hpp"
#include "lassokit/lasso_automaton.hpp"
#include "lassokit/lassoexp.hpp"
#include "lassokit/omega.hpp"
#include "support.hpp"

using namespace lassokit;

namespace {

const Alphabet ab("ab");

bool all_a(const Word& w) { return w.find_first_not_of('a') == Word::npos; }

struct Verdict {
    bool pass;
    std::string detail;
};

Verdict unsat_language() {
    const auto A = testing::load("a_then_ba.lauto");
    std::size_t mismatches = 0, total = 0;
    for (const auto& l : enumerate_lassos(ab, 6, 6)) {
        ++total;
        bool expected = all_a(l.spoke()) && l.loop()[0] == 'b' && all_a(l.loop().substr(1));
        mismatches += accepts(A, l) != expected;
    }
    const bool run = accepts(A, Lasso("aaa", "baa"));
    std::ostringstream d;
    d << mismatches << " mismatches over " << total << " lassos; aaa:baa " << (run ? "accepted" : "rejected");
    return {mismatches == 0 && run, d.str()};
}

/// Bounded check: gamma-equivalent lassos up to the bound are treated alike.
bool brute_saturated(const LassoAutomaton& A, std::size_t bound) {
    std::map<Lasso, bool> seen;
    for (const auto& l : enumerate_lassos(A.alphabet(), bound, bound)) {
        auto [it, inserted] = seen.emplace(normal_form(l), accepts(A, l));
        if (!inserted && it->second != accepts(A, l)) return false;
    }
    return true;
}

Verdict saturation() {
    const auto unsat = testing::load("a_then_ba.lauto");
    const auto ends_a = testing::load("ends_in_a.lauto");
    const auto s1 = is_saturated(unsat);
    const auto s2 = is_saturated(ends_a);
    bool ok1 = !s1.saturated && s1.counterexample && gamma_equiv(s1.counterexample->first, s1.counterexample->second) &&
               normal_form(s1.counterexample->first) == Lasso("", "b") &&
               accepts(unsat, s1.counterexample->first) != accepts(unsat, s1.counterexample->second);
    bool ok2 = s2.saturated && brute_saturated(ends_a, 5);
    std::ostringstream d;
    d << "a_then_ba: " << (s1.counterexample ? s1.counterexample->first.to_string() + " vs " + s1.counterexample->second.to_string() : "none")
      << "; ends_in_a: " << (s2.saturated ? "saturated" : "not saturated");
    return {ok1 && ok2, d.str()};
}

Verdict bab_language() {
    const auto rho = parse_lexp("b(a*b@)", ab);
    std::size_t mismatches = 0;
    for (const auto& l : enumerate_lassos(ab, 6, 6)) {
        const Word& u = l.spoke();
        bool expected = l.loop() == "b" && !u.empty() && u[0] == 'b' && all_a(u.substr(1));
        mismatches += member_lasso_naive(rho, l) != expected;
    }
    const bool eq = equivalent_lasso(compile_lasso(rho, ab), testing::load("b_as_b.lauto")).equivalent;
    std::ostringstream d;
    d << mismatches << " membership mismatches; b_as_b.lauto " << (eq ? "equivalent" : "not equivalent");
    return {mismatches == 0 && eq, d.str()};
}

Verdict compile_shape() {
    const auto rho = parse_lexp("b(ab)*(ab*)@", ab);
    const auto A = compile_lasso(rho, ab);
    std::size_t mismatches = 0;
    for (const auto& l : enumerate_lassos(ab, 5, 5)) mismatches += accepts(A, l) != member_lasso_naive(rho, l);
    std::ostringstream d;
    d << A.num_spoke() << " spoke + " << A.num_loop() << " loop states; " << mismatches << " mismatches";
    return {A.num_spoke() == 3 && A.num_loop() == 2 && mismatches == 0, d.str()};
}

Verdict extraction_round_trip() {
    const auto A = compile_lasso(parse_lexp("b(ab)*(ab*)@", ab), ab);
    const auto x = extract_expr(A);
    const bool eq = equivalent_lasso(compile_lasso(x, ab), A).equivalent;
    return {eq, "extracted " + disjunctive_form(x).to_string()};
}

Verdict split_fixed_case() {
    const char* pairs_in[8][2] = {{"1", "b(a+b*)"}, {"b", "1(a+b*)"}, {"b1", "a"},   {"ba", "1"},
                                {"bb*1", "bb*"}, {"bb*b", "1b*"},   {"b1", "1"}, {"bb*b", "1"}};
    std::set<SplitPair> expected;
    for (auto& p : pairs_in) expected.insert({normalize_b(parse_rexp(p[0], ab)), normalize_b(parse_rexp(p[1], ab))});
    const auto got = split(parse_rexp("b(a+b*)", ab));
    const std::set<SplitPair> got_set(got.begin(), got.end());
    std::ostringstream d;
    d << got_set.size() << " pairs, " << expected.size() << " expected";
    return {got_set == expected, d.str()};
}

Verdict weak_representation_gap() {
    const Lasso aa("", "aa");
    const bool weak = member_lasso_naive(DisjunctiveForm({{parse_rexp("(a+b)*", ab), parse_rexp("a", ab)}}), aa);
    const OmegaExpr T = parse_oexp("(a+b)*a$", ab);
    const bool up = up_member(T, aa);
    const bool rep = member_lasso_naive(represent(T, ab), aa);
    std::ostringstream d;
    d << "weak " << weak << ", oracle " << up << ", represent " << rep;
    return {!weak && up && rep, d.str()};
}

Verdict gamma_counterexample() {
    const Alphabet a1("a");
    const auto g = gamma_map(DisjunctiveForm({{parse_rexp("aaa", a1), parse_rexp("a", a1)}}), a1);
    const DisjunctiveForm expected({{parse_rexp("aa", a1), parse_rexp("a", a1)}, {parse_rexp("aaa", a1), parse_rexp("a", a1)}});
    std::size_t mismatches = 0;
    for (const auto& l : enumerate_lassos(ab, 6, 6)) mismatches += member_lasso_naive(g, l) != member_lasso_naive(expected, l);
    const bool has = member_lasso_naive(g, Lasso("aa", "a"));
    const bool open = !member_lasso_naive(g, Lasso("a", "a")) || !member_lasso_naive(g, Lasso("", "a"));
    std::ostringstream d;
    d << mismatches << " mismatches; " << "result " << g.to_string();
    return {mismatches == 0 && has && open, d.str()};
}

Verdict omega_corpus() {
    const std::vector<const char*> corpus = {"a$", "(ab)$", "a(ba)$", "(a+b)*a$", "(aa)$+b(ab)$", "b(a+b*)a$"};
    const auto ls = enumerate_lassos(ab, 4, 4);
    bool ok = true;
    std::ostringstream d;
    for (const char* text : corpus) {
        const auto start = std::chrono::steady_clock::now();
        const OmegaExpr T = parse_oexp(text, ab);
        bool sat = false;
        std::size_t mismatches = 0;
        try {
            const auto A = omega_to_omega_automaton(T, ab);
            sat = is_saturated(A).saturated;
            const Nba nba = to_nba(T, ab);
            for (const auto& l : ls) mismatches += accepts(A, l) != up_member(nba, l);
        } catch (const std::exception& e) {
            d << text << " threw " << e.what() << "; ";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool good = sat && mismatches == 0 && secs <= 30.0;
        ok = ok && good;
        d << text << (good ? " ok" : " FAILED") << " (" << static_cast<int>(secs * 1000) << " ms); ";
    }
    return {ok, d.str()};
}

Verdict property_suites() {
    const std::vector<std::string> bins = {"test_ratexp", "test_langops", "test_lasso", "test_lassoexp", "test_lassoaut", "test_omega"};
    bool ok = true;
    std::string detail;
    for (const auto& b : bins) {
        const std::string cmd = std::string(LASSOKIT_TEST_BIN_DIR) + "/" + b + " --test-case='property:*' --no-intro --minimal > /dev/null 2>&1";
        const bool pass = std::system(cmd.c_str()) == 0;
        ok = ok && pass;
        detail += b + (pass ? " ok; " : " FAILED; ");
    }
    return {ok, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"a_then_ba.lauto language and sample run", unsat_language},
        {"saturation of a_then_ba.lauto and ends_in_a.lauto", saturation},
        {"b(a*b@) language and b_as_b.lauto", bab_language},
        {"compile_lasso(b(ab)*(ab*)@) shape and agreement", compile_shape},
        {"extraction round trip", extraction_round_trip},
        {"split(b(a+b*)) yields the expected eight pairs", split_fixed_case},
        {"weak representation misses (,aa); represent keeps it", weak_representation_gap},
        {"gamma_map({(aaa,a)}) and its missing reductions", gamma_counterexample},
        {"omega-expression corpus through the pipeline", omega_corpus},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v{false, ""};
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << v.detail << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
