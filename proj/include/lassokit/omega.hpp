#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lassokit/lasso.hpp"
#include "lassokit/lasso_automaton.hpp"
#include "lassokit/lassoexp.hpp"
#include "lassokit/ratexp.hpp"

namespace lassokit {

enum class OmegaKind : std::uint8_t { Zero, Sum, Prefix, Power };

/// Rational omega-expression: 0 | T + T | t.T | r$ with r free of the
/// empty word.
class OmegaExpr {
public:
    static OmegaExpr zero();
    static OmegaExpr sum(OmegaExpr left, OmegaExpr right);
    static OmegaExpr prefix(RatExpr t, OmegaExpr rest);
    /// Throws SideConditionError when ewp(r).
    static OmegaExpr power(RatExpr r);

    OmegaExpr();

    [[nodiscard]] OmegaKind kind() const noexcept;
    /// Power operand, or the prefix of a Prefix node.
    [[nodiscard]] const RatExpr& rat() const noexcept;
    [[nodiscard]] const OmegaExpr& rest() const noexcept;
    [[nodiscard]] const OmegaExpr& left() const noexcept;
    [[nodiscard]] const OmegaExpr& right() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const OmegaExpr& a, const OmegaExpr& b);

private:
    struct Node;
    explicit OmegaExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the grammar with `$`. Throws ParseError or SideConditionError.
OmegaExpr parse_oexp(std::string_view text, const Alphabet& sigma);

std::string letters_of(const OmegaExpr& T);

/// Nondeterministic Buchi automaton, used only as a membership oracle.
struct Nba {
    Alphabet alphabet;
    /// succ[q][letter] lists the successors of q.
    std::vector<std::vector<std::vector<State>>> succ;
    std::vector<bool> initial;
    std::vector<bool> accepting;

    [[nodiscard]] std::size_t num_states() const noexcept { return succ.size(); }
    State add_state(bool is_initial, bool is_accepting);
};

/// Glues DFAs of the rational parts; shares nothing with the lasso
/// machinery.
Nba to_nba(const OmegaExpr& T, const Alphabet& sigma);

/// Whether spoke.loop^omega is accepted: search the product of the NBA
/// with the lasso's position cycle for a reachable accepting cycle.
bool up_member(const Nba& nba, const Lasso& l);
/// Builds the NBA over the letters of T and l.
bool up_member(const OmegaExpr& T, const Lasso& l);

/// h(0) = 0, h(T1 + T2) = h(T1) + h(T2), h(t.T) = t.h(T) and
/// h(t$) = sum over (t0, t1) in split(t) of (t*.t0).(t1.t*.t0)@.
DisjunctiveForm h_map(const OmegaExpr& T);

/// For each pair (t, s) and each (t0', t1') in split(t), (s0', s1') in
/// split(s), the summand t0'.(root((t1' & s1').s0'))@. Intersection and root
/// are computed on DFAs and converted back with dfa_to_expr.
DisjunctiveForm gamma_map(const DisjunctiveForm& df, const Alphabet& sigma);

/// Applies gamma_map until the form stops changing or `max_rounds` is hit.
/// No termination guarantee; not used by the pipeline.
DisjunctiveForm gamma_iterate(const DisjunctiveForm& df, const Alphabet& sigma, std::size_t max_rounds);

/// gamma_map(h_map(T)).
DisjunctiveForm represent(const OmegaExpr& T, const Alphabet& sigma);

/// compile_lasso(represent(T)). The result is checked with is_saturated;
/// failure throws CertificationError.
LassoAutomaton omega_to_omega_automaton(const OmegaExpr& T, const Alphabet& sigma);

}  // namespace lassokit
