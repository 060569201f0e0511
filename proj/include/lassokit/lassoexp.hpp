#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lassokit/lasso.hpp"
#include "lassokit/lasso_automaton.hpp"
#include "lassokit/ratexp.hpp"

namespace lassokit {

enum class LassoKind : std::uint8_t { Zero, Circle, Prefix, Sum };

/// Rational lasso expression: 0 | r@ | t.rho | rho + rho.
/// A circle operand never has the empty word property.
class LassoExpr {
public:
    static LassoExpr zero();
    /// Throws SideConditionError when ewp(r).
    static LassoExpr circle(RatExpr r);
    static LassoExpr prefix(RatExpr t, LassoExpr rest);
    static LassoExpr sum(LassoExpr left, LassoExpr right);

    LassoExpr();

    [[nodiscard]] LassoKind kind() const noexcept;
    /// Circle operand, or the prefix of a Prefix node.
    [[nodiscard]] const RatExpr& rat() const noexcept;
    /// Body of a Prefix node.
    [[nodiscard]] const LassoExpr& rest() const noexcept;
    [[nodiscard]] const LassoExpr& left() const noexcept;
    [[nodiscard]] const LassoExpr& right() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const LassoExpr& a, const LassoExpr& b);

private:
    struct Node;
    explicit LassoExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// (spoke, loop) summand of a disjunctive form.
struct LassoPair {
    RatExpr spoke;
    RatExpr loop;
    friend bool operator==(const LassoPair&, const LassoPair&) = default;
    friend auto operator<=>(const LassoPair&, const LassoPair&) = default;
};

/// Finite sum of t.(r)@ terms kept in canonical shape: spokes normalized,
/// loops kept as written, pairs with an empty spoke or loop language
/// (normal form 0) dropped, the rest sorted and deduplicated. The empty
/// form denotes 0. Two canonical values compare equal exactly when they
/// hold the same pairs, so these values serve directly as automaton states.
class DisjunctiveForm {
public:
    DisjunctiveForm() = default;
    /// Throws SideConditionError when a surviving loop has ewp.
    explicit DisjunctiveForm(std::vector<LassoPair> pairs);

    [[nodiscard]] const std::vector<LassoPair>& pairs() const noexcept { return pairs_; }
    [[nodiscard]] bool empty() const noexcept { return pairs_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return pairs_.size(); }

    [[nodiscard]] LassoExpr to_expr() const;
    /// `t1.(r1)@ + t2.(r2)@ + ...`, or `0` when empty.
    [[nodiscard]] std::string to_string() const;

    friend DisjunctiveForm operator+(const DisjunctiveForm& a, const DisjunctiveForm& b);
    friend bool operator==(const DisjunctiveForm&, const DisjunctiveForm&) = default;
    friend auto operator<=>(const DisjunctiveForm&, const DisjunctiveForm&) = default;

private:
    std::vector<LassoPair> pairs_;
};

/// Parses the grammar with `@`. Throws ParseError or SideConditionError.
LassoExpr parse_lexp(std::string_view text, const Alphabet& sigma);

/// Letters occurring in `rho`, in first-occurrence order.
std::string letters_of(const LassoExpr& rho);

/// Direct semantics, built on member_naive only.
bool member_lasso_naive(const LassoExpr& rho, const Lasso& l);
bool member_lasso_naive(const DisjunctiveForm& df, const Lasso& l);

DisjunctiveForm disjunctive_form(const LassoExpr& rho);

/// Spoke derivative on general expressions:
/// d1(t@) = 0, d1(r.rho) = d(r).rho + [r in N].d1(rho), pointwise on sums.
LassoExpr d1_general(const LassoExpr& rho, char a);
/// Switch derivative: d2(t@) = d(t), d2(r.rho) = [r in N].d2(rho).
RatExpr d2_general(const LassoExpr& rho, char a);

/// d1 on disjunctive forms: each t.(s)@ becomes d(t).(s)@.
DisjunctiveForm d1_df(const DisjunctiveForm& df, char a);
/// Sum of d(s) over the pairs whose spoke has ewp, normalized.
RatExpr d2_df(const DisjunctiveForm& df, char a);

/// Brzozowski construction for lassos. Spoke states are the disjunctive
/// forms reachable under d1_df, loop states the normalized rational
/// expressions reachable from the d2_df images under deriv. Spoke states
/// are named x0, x1, ... and loop states y0, y1, ... in discovery order.
LassoAutomaton compile_lasso(const LassoExpr& rho, const Alphabet& sigma);
LassoAutomaton compile_lasso(const DisjunctiveForm& df, const Alphabet& sigma);

}  // namespace lassokit
