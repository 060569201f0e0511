#pragma once

// Random term generators and small helpers shared by the test programs.

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lassokit/lasso.hpp"
#include "lassokit/lasso_automaton.hpp"
#include "lassokit/lassoexp.hpp"
#include "lassokit/omega.hpp"
#include "lassokit/ratexp.hpp"

namespace testing {

using namespace lassokit;

inline constexpr unsigned kSeed = 20240611;

inline std::string data_file(const std::string& name) {
    std::ifstream in(std::string(LASSOKIT_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing test data " + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline LassoAutomaton load(const std::string& name) { return read_automaton(data_file(name)); }

class Gen {
public:
    explicit Gen(unsigned seed = kSeed, std::string letters = "ab") : rng_(seed), letters_(std::move(letters)) {}

    std::mt19937& rng() { return rng_; }

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    RatExpr rat(int depth) {
        if (depth <= 0 || coin(0.25)) {
            std::size_t r = below(10);
            if (r == 0) return RatExpr::zero();
            if (r == 1) return RatExpr::one();
            return RatExpr::letter(letters_[below(letters_.size())]);
        }
        switch (below(3)) {
            case 0: return RatExpr::concat(rat(depth - 1), rat(depth - 1));
            case 1: return RatExpr::sum(rat(depth - 1), rat(depth - 1));
            default: return RatExpr::star(rat(depth - 1));
        }
    }

    /// Random expression without the empty word property.
    RatExpr rat_nonempty_word(int depth) {
        for (;;) {
            RatExpr r = rat(depth);
            if (!r.ewp()) return r;
        }
    }

    LassoExpr lasso(int depth) {
        if (depth <= 0 || coin(0.3)) return coin(0.1) ? LassoExpr::zero() : LassoExpr::circle(rat_nonempty_word(2));
        if (coin(0.5)) return LassoExpr::prefix(rat(2), lasso(depth - 1));
        return LassoExpr::sum(lasso(depth - 1), lasso(depth - 1));
    }

    OmegaExpr omega(int depth) {
        if (depth <= 0 || coin(0.4)) return OmegaExpr::power(rat_nonempty_word(2));
        if (coin(0.5)) return OmegaExpr::prefix(rat(2), omega(depth - 1));
        return OmegaExpr::sum(omega(depth - 1), omega(depth - 1));
    }

    Word word(std::size_t max_len) {
        Word w;
        std::size_t n = below(max_len + 1);
        for (std::size_t i = 0; i < n; ++i) w.push_back(letters_[below(letters_.size())]);
        return w;
    }

    Lasso lasso_value(std::size_t max_spoke, std::size_t max_loop) {
        Word v;
        while (v.empty()) v = word(max_loop);
        return Lasso(word(max_spoke), v);
    }

    LassoAutomaton automaton(std::size_t spokes, std::size_t loops) {
        Alphabet sigma(letters_);
        LassoAutomaton A(sigma, spokes, loops, 0);
        for (State x = 0; x < spokes; ++x)
            for (std::size_t a = 0; a < sigma.size(); ++a) {
                A.set_spoke_next(x, a, static_cast<State>(below(spokes)));
                A.set_switch_next(x, a, static_cast<State>(below(loops)));
            }
        for (State y = 0; y < loops; ++y) {
            A.set_final(y, coin());
            for (std::size_t a = 0; a < sigma.size(); ++a) A.set_loop_next(y, a, static_cast<State>(below(loops)));
        }
        return A;
    }

private:
    std::mt19937 rng_;
    std::string letters_;
};

/// Words of the language of t up to max_len, by the naive matcher.
inline std::set<Word> words_of(const RatExpr& t, const Alphabet& sigma, std::size_t max_len) {
    auto v = enumerate_language(t, sigma, max_len);
    return {v.begin(), v.end()};
}

}  // namespace testing
