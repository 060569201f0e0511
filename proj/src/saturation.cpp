// Exact saturation check. A lasso language is closed under the rewrite
// system in both directions iff it is closed under every single rotation
// step and every single power step, each in both directions. Per reachable
// spoke state x these become statements about the loop language P_x:
//   rotation:  (u a, v a) ~ (u, a v)   <=>  a^-1 P_x  ==  P_x' a^-1
//   power:     (u, w^k)   ~ (u, w)     <=>  root(P_x) == P_x
// The second one is split into its two inclusions so the witness tells
// which lasso of the pair is accepted.

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "lassokit/errors.hpp"
#include "lassokit/lasso_automaton.hpp"

namespace lassokit {

namespace {

using Pair = std::pair<Lasso, Lasso>;

/// Candidate counterexample. At equal total length a rotation witness is
/// preferred over a power witness, mirroring the rule priority of
/// reduce_step; remaining ties go lexicographically.
struct Candidate {
    std::size_t length;
    int rule;  // 0 = rotation, 1 = power
    Pair pair;
    bool operator<(const Candidate& o) const {
        return std::tie(length, rule, pair) < std::tie(o.length, o.rule, o.pair);
    }
};

Word power(const Word& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) out += w;
    return out;
}

/// Least k >= 2 such that run_dfa(d, w^k) equals `want`. The orbit argument
/// bounds k by the number of states plus one.
std::size_t find_power(const Dfa& d, const Word& w, bool want) {
    for (std::size_t k = 2; k <= d.num_states() + 1; ++k)
        if (run_dfa(d, power(w, k)) == want) return k;
    throw CertificationError("is_saturated: power witness not found");
}

}  // namespace

SaturationResult is_saturated(const LassoAutomaton& A) {
    std::optional<Candidate> best;
    auto offer = [&best](int rule, Pair p) {
        Candidate c{p.first.length() + p.second.length(), rule, std::move(p)};
        if (!best || c < *best) best = std::move(c);
    };
    const auto spokes = reachable_spokes(A);
    std::vector<std::optional<Dfa>> loops(A.num_spoke());
    auto loop_of = [&](State x) -> const Dfa& {
        if (!loops[x]) loops[x] = minimize(loop_dfa(A, x));
        return *loops[x];
    };
    for (const auto& [x, u] : spokes) {
        const Dfa& px = loop_of(x);
        // Power steps.
        const Dfa reduced = boolean_combine(root(px), px, BoolOp::Diff);
        if (auto e = is_empty_dfa(reduced); !e.empty) {
            const Word& w = *e.witness;
            offer(1, {Lasso(u, power(w, find_power(px, w, true))), Lasso(u, w)});
        }
        const Dfa expanded = boolean_combine(px, root(complement(px)), BoolOp::And);
        if (auto e = is_empty_dfa(expanded); !e.empty) {
            const Word& w = *e.witness;
            offer(1, {Lasso(u, w), Lasso(u, power(w, find_power(px, w, false)))});
        }
        // Rotation steps.
        for (char a : A.alphabet()) {
            const State x2 = A.spoke_next(x, A.alphabet().index_of(a));
            const Dfa rotated = left_derivative(px, a);
            const Dfa shifted = right_quotient(loop_of(x2), a);
            auto eq = equivalent_dfa(rotated, shifted);
            if (eq.equivalent) continue;
            const Word& v = *eq.counterexample;
            Lasso reduced_form(u, a + v);
            Lasso expanded_form(u + a, v + a);
            if (run_dfa(rotated, v)) offer(0, {reduced_form, expanded_form});
            else offer(0, {expanded_form, reduced_form});
        }
    }
    if (!best) return {true, std::nullopt};
    return {false, best->pair};
}

}  // namespace lassokit
