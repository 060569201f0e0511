#include <doctest.h>

#include <set>

#include "lassokit/lasso.hpp"
#include "support.hpp"

using namespace lassokit;
using testing::Gen;

namespace {

const Alphabet ab("ab");

Lasso L(const char* s) { return Lasso::parse(s); }

/// Every single rewrite step, with the power rule at every k > 1.
std::vector<Lasso> all_steps(const Lasso& l) {
    std::vector<Lasso> out;
    const Word& u = l.spoke();
    const Word& v = l.loop();
    if (!u.empty() && u.back() == v.back()) out.emplace_back(u.substr(0, u.size() - 1), v.back() + v.substr(0, v.size() - 1));
    for (std::size_t p = 1; p < v.size(); ++p) {
        if (v.size() % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < v.size() && periodic; ++i) periodic = v[i] == v[i - p];
        if (periodic) out.emplace_back(u, v.substr(0, p));
    }
    return out;
}

bool is_primitive(const Word& v) { return primitive_root(v) == v; }

}  // namespace

TEST_CASE("lasso literals") {
    CHECK(L("aaa:baa") == Lasso("aaa", "baa"));
    CHECK(L(":b") == Lasso("", "b"));
    CHECK_THROWS(L("ab:"));
    CHECK_THROWS(L("ab"));
    CHECK_THROWS(Lasso("a", ""));
    CHECK(L("ab:ba").to_string() == "ab:ba");
}

TEST_CASE("primitive roots") {
    CHECK(primitive_root("abab") == "ab");
    CHECK(primitive_root("aaa") == "a");
    CHECK(primitive_root("aba") == "aba");
    CHECK(primitive_root("abaaba") == "aba");
}

TEST_CASE("single reduction steps") {
    CHECK(reduce_step(L("aba:baba")) == L("ab:abab"));
    CHECK(reduce_step(L(":abab")) == L(":ab"));
    CHECK_FALSE(reduce_step(L(":ab")).has_value());
}

TEST_CASE("normal forms") {
    CHECK(normal_form(L("aba:baba")) == L(":ab"));
    CHECK(normal_form(L("ab:ab")) == L(":ab"));
    CHECK(normal_form(L(":a")) == L(":a"));
    CHECK(normal_form(L("aaa:baa")) == L("a:aab"));
    CHECK(up_equal(L("aaa:baa"), L("a:aab")));
    CHECK_FALSE(up_equal(L("aaa:baa"), L("aa:ab")));
}

TEST_CASE("gamma equivalence") {
    CHECK(gamma_equiv(L(":b"), L("b:b")));
    CHECK_FALSE(gamma_equiv(L(":a"), L(":b")));
    CHECK_FALSE(gamma_equiv(L("aaa:baa"), L(":ab")));
}

TEST_CASE("direct comparison of periodic words") {
    CHECK(up_equal(L("aba:baba"), L("a:ba")));
    CHECK_FALSE(up_equal(L(":ab"), L(":ba")));
    CHECK(up_equal(L(":a"), L(":aa")));
}

TEST_CASE("expansions") {
    auto e = expansions(L(":ab"), 2);
    CHECK(std::set<Lasso>(e.begin(), e.end()) == std::set<Lasso>{L("a:ba"), L(":abab")});
    // (b,b): rotating out the first loop letter gives (bb, b).
    auto f = expansions(L("b:b"), 3);
    CHECK(std::set<Lasso>(f.begin(), f.end()) == std::set<Lasso>{L("bb:b"), L("b:bb"), L("b:bbb")});
    for (const auto& x : f) CHECK(normal_form(x) == normal_form(L("b:b")));
}

TEST_CASE("enumeration") {
    CHECK(enumerate_lassos(Alphabet("a"), 0, 1) == std::vector<Lasso>{L(":a")});
    CHECK(enumerate_lassos(ab, 1, 1).size() == 6);
    CHECK(enumerate_lassos(ab, 2, 2).size() == 42);
}

TEST_CASE("equivalent lassos within bounds") {
    for (const auto& l : equivalent_lassos(L(":ab"), 3, 4)) CHECK(gamma_equiv(l, L(":ab")));
    auto all = equivalent_lassos(L(":ab"), 3, 4);
    std::set<Lasso> s(all.begin(), all.end());
    CHECK(s.count(L("a:ba")));
    CHECK(s.count(L("ab:abab")));
    CHECK_FALSE(s.count(L(":ba")));
}

TEST_CASE("property: confluence over every step order") {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t lv = 1; lv <= n; ++lv) {
            std::size_t lu = n - lv;
            for (const auto& u : all_words(ab, lu)) {
                if (u.size() != lu) continue;
                for (const auto& v : all_words(ab, lv)) {
                    if (v.size() != lv) continue;
                    const Lasso start(u, v);
                    const Lasso nf = normal_form(start);
                    std::set<Lasso> seen{start};
                    std::vector<Lasso> todo{start};
                    while (!todo.empty()) {
                        Lasso cur = todo.back();
                        todo.pop_back();
                        auto next = all_steps(cur);
                        if (next.empty()) REQUIRE_MESSAGE(cur == nf, start.to_string());
                        for (auto& x : next)
                            if (seen.insert(x).second) todo.push_back(x);
                    }
                    ++checked;
                }
            }
        }
    CHECK(checked >= 200);
}

TEST_CASE("property: rewriting agrees with the periodic words") {
    const auto ls = enumerate_lassos(ab, 4, 4);
    for (const auto& l1 : ls)
        for (const auto& l2 : ls) REQUIRE(gamma_equiv(l1, l2) == up_equal(l1, l2));
}

TEST_CASE("property: normal form shape") {
    for (const auto& l : enumerate_lassos(ab, 6, 6)) {
        Lasso nf = normal_form(l);
        REQUIRE(is_primitive(nf.loop()));
        REQUIRE((nf.spoke().empty() || nf.spoke().back() != nf.loop().back()));
    }
}

TEST_CASE("property: expansions preserve the class") {
    Gen g(testing::kSeed + 20);
    for (int i = 0; i < 300; ++i) {
        Lasso l = g.lasso_value(5, 5);
        for (const auto& x : expansions(l, 4)) REQUIRE(gamma_equiv(x, l));
    }
}
