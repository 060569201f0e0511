#include <doctest.h>

#include <algorithm>
#include <set>

#include "lassokit/dfa.hpp"
#include "lassokit/errors.hpp"
#include "lassokit/ratexp.hpp"
#include "support.hpp"

using namespace lassokit;
using testing::Gen;

namespace {

const Alphabet ab("ab");

Dfa C(const char* s, const Alphabet& sigma = ab) { return compile_dfa(parse_rexp(s, sigma), sigma); }

std::set<Word> lang(const Dfa& d, std::size_t n) {
    std::set<Word> out;
    for (const auto& w : all_words(d.alphabet(), n))
        if (run_dfa(d, w)) out.insert(w);
    return out;
}

std::size_t count_finals(const Dfa& d) {
    std::size_t n = 0;
    for (State q = 0; q < d.num_states(); ++q) n += d.is_final(q);
    return n;
}

Word power(const Word& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) out += w;
    return out;
}

}  // namespace

TEST_CASE("compile_dfa state counts") {
    Dfa d = C("ab*");
    CHECK(d.num_states() == 3);
    CHECK(count_finals(d) == 1);
    CHECK(d.is_final(d.next_symbol(d.initial(), 'a')));

    Dfa e = C("b(ab)*");
    CHECK(e.num_states() == 3);
    CHECK(count_finals(e) == 1);
    CHECK(e.is_final(e.next_symbol(e.initial(), 'b')));

    Dfa z = C("0");
    CHECK(z.num_states() == 1);
    CHECK(count_finals(z) == 0);
}

TEST_CASE("boolean combinations") {
    const Alphabet a1("a");
    Dfa both = boolean_combine(C("a*", a1), C("(aa)*", a1), BoolOp::And);
    std::set<Word> expected;
    for (const auto& w : all_words(a1, 8))
        if (w.size() % 2 == 0) expected.insert(w);
    CHECK(lang(both, 8) == expected);

    Dfa d = C("b(ab)*");
    CHECK(equivalent_dfa(boolean_combine(d, empty_dfa(ab), BoolOp::Or), d).equivalent);
    CHECK(is_empty_dfa(boolean_combine(d, d, BoolOp::Diff)).empty);
    CHECK_THROWS_AS(boolean_combine(d, C("a*", a1), BoolOp::And), AlphabetMismatch);
}

TEST_CASE("complement") {
    Dfa d = C("b(ab)*");
    CHECK(equivalent_dfa(complement(complement(d)), d).equivalent);
    CHECK(lang(complement(C("0")), 4).size() == all_words(ab, 4).size());
    CHECK(run_dfa(complement(C("a*")), "b"));
}

TEST_CASE("emptiness") {
    CHECK(is_empty_dfa(C("0")).empty);
    auto r = is_empty_dfa(C("ab*"));
    CHECK_FALSE(r.empty);
    CHECK(r.witness == Word("a"));
    CHECK(is_empty_dfa(boolean_combine(C("a*"), C("a*"), BoolOp::Diff)).empty);
}

TEST_CASE("equivalence") {
    CHECK(equivalent_dfa(C("1(ab)*"), C("(ab)*")).equivalent);
    auto r = equivalent_dfa(C("a"), C("b"));
    CHECK_FALSE(r.equivalent);
    CHECK(r.counterexample == Word("a"));
    CHECK(equivalent_dfa(C("(a+b)*"), complement(C("0"))).equivalent);
}

TEST_CASE("quotients") {
    CHECK(equivalent_dfa(left_derivative(C("ab*"), 'a'), C("b*")).equivalent);
    CHECK(is_empty_dfa(left_derivative(C("0"), 'a')).empty);
    CHECK(equivalent_dfa(left_derivative(C("a*"), 'a'), C("a*")).equivalent);

    std::set<Word> abk;
    for (const auto& w : all_words(ab, 6))
        if (!w.empty() && w[0] == 'a' && std::all_of(w.begin() + 1, w.end(), [](char c) { return c == 'b'; }))
            abk.insert(w);
    CHECK(lang(right_quotient(C("ab*"), 'b'), 6) == abk);
    CHECK(lang(right_quotient(C("a"), 'a'), 4) == std::set<Word>{""});
    CHECK(is_empty_dfa(right_quotient(C("0"), 'a')).empty);
}

TEST_CASE("root examples") {
    const Alphabet a1("a");
    CHECK(lang(root(C("aa", a1)), 5) == std::set<Word>{"a", "aa"});
    CHECK(is_empty_dfa(root(C("0"))).empty);
    CHECK(equivalent_dfa(root(C("(aa)*a", a1)), C("(aa)*a", a1)).equivalent);
}

TEST_CASE("minimize is canonical") {
    Dfa d1 = C("(a+b)*abb");
    Dfa d2 = C("(a*b*)*abb+aabb");
    CHECK(equivalent_dfa(d1, d2).equivalent);
    Dfa m1 = minimize(d1), m2 = minimize(d2);
    REQUIRE(m1.num_states() == m2.num_states());
    for (State q = 0; q < m1.num_states(); ++q) {
        CHECK(m1.is_final(q) == m2.is_final(q));
        for (std::size_t a = 0; a < ab.size(); ++a) CHECK(m1.next(q, a) == m2.next(q, a));
    }
}

TEST_CASE("dfa_to_expr") {
    CHECK(equivalent_dfa(compile_dfa(dfa_to_expr(C("ab*")), ab), C("ab*")).equivalent);
    CHECK(dfa_to_expr(empty_dfa(ab)).is_zero());
    CHECK(equivalent_dfa(compile_dfa(dfa_to_expr(C("b(ab)*")), ab), C("b(ab)*")).equivalent);
}

TEST_CASE("run_dfa") {
    CHECK(run_dfa(C("ab*"), "abb"));
    CHECK_FALSE(run_dfa(C("ab*"), ""));
    CHECK(run_dfa(C("1"), ""));
    CHECK_THROWS_AS(run_dfa(C("ab*"), "c"), std::invalid_argument);
}

TEST_CASE("DFA file round trip") {
    Gen g(testing::kSeed + 10);
    for (int i = 0; i < 50; ++i) {
        Dfa d = compile_dfa(g.rat(4), ab);
        Dfa back = read_dfa(write_dfa(d));
        CHECK(write_dfa(back) == write_dfa(d));
    }
    CHECK(dfa_to_dot(C("ab*")).find("digraph") != std::string::npos);
}

TEST_CASE("property: compile_dfa agrees with the naive matcher") {
    Gen g(testing::kSeed + 11);
    const auto words = all_words(ab, 6);
    for (int i = 0; i < 250; ++i) {
        RatExpr t = g.rat(4);
        Dfa d = compile_dfa(t, ab);
        for (const auto& u : words) REQUIRE_MESSAGE(run_dfa(d, u) == member_naive(t, u), t.to_string() << " " << u);
    }
}

TEST_CASE("property: root matches the bounded power oracle") {
    Gen g(testing::kSeed + 12);
    const auto words = all_words(ab, 4);
    int tested = 0;
    while (tested < 200) {
        RatExpr t = g.rat(4);
        Dfa d = compile_dfa(t, ab);
        if (d.num_states() > 6) continue;
        ++tested;
        Dfa r = root(d);
        CHECK_FALSE(run_dfa(r, ""));
        for (const auto& u : words) {
            if (u.empty()) continue;
            bool oracle = false;
            for (std::size_t k = 1; k <= d.num_states() && !oracle; ++k) oracle = run_dfa(d, power(u, k));
            REQUIRE_MESSAGE(run_dfa(r, u) == oracle, t.to_string() << " " << u);
        }
    }
}

TEST_CASE("property: quotient laws") {
    Gen g(testing::kSeed + 13);
    const auto words = all_words(ab, 6);
    for (int i = 0; i < 200; ++i) {
        RatExpr t = g.rat(4);
        Dfa d = compile_dfa(t, ab);
        for (char a : ab) {
            Dfa l = left_derivative(d, a), r = right_quotient(d, a);
            for (const auto& v : words) {
                REQUIRE(run_dfa(l, v) == run_dfa(d, a + v));
                REQUIRE(run_dfa(r, v) == run_dfa(d, v + a));
            }
        }
    }
}

TEST_CASE("property: dfa_to_expr certificate") {
    Gen g(testing::kSeed + 14);
    for (int i = 0; i < 200; ++i) {
        Dfa d = compile_dfa(g.rat(4), ab);
        RatExpr back;
        REQUIRE_NOTHROW(back = dfa_to_expr(d));
        CHECK(equivalent_dfa(compile_dfa(back, ab), d).equivalent);
    }
}
