#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lassokit/alphabet.hpp"

namespace lassokit {

enum class RatKind : std::uint8_t { Zero, One, Letter, Concat, Sum, Star };

/// Immutable rational expression over the grammar 0 | 1 | a | t.t | t+t | t*.
///
/// Concatenation is binary; sums are n-ary (at least two summands) so that
/// normalized sums can be stored flat. Structural equality and the total
/// structural order below are what `normalize_b` sorts summands by:
/// constructor rank first, then letter, then children lexicographically.
class RatExpr {
public:
    static RatExpr zero();
    static RatExpr one();
    static RatExpr letter(char symbol);
    static RatExpr concat(RatExpr left, RatExpr right);
    static RatExpr sum(RatExpr left, RatExpr right);
    /// Requires at least two summands.
    static RatExpr sum(std::vector<RatExpr> summands);
    static RatExpr star(RatExpr operand);

    /// Default-constructed expression is 0.
    RatExpr();

    [[nodiscard]] RatKind kind() const noexcept;
    [[nodiscard]] char symbol() const noexcept;
    [[nodiscard]] const std::vector<RatExpr>& children() const noexcept;
    [[nodiscard]] const RatExpr& left() const { return children().front(); }
    [[nodiscard]] const RatExpr& right() const { return children().back(); }
    [[nodiscard]] const RatExpr& operand() const { return children().front(); }

    /// Empty word property, cached at construction.
    [[nodiscard]] bool ewp() const noexcept;
    [[nodiscard]] std::size_t hash() const noexcept;
    /// Number of syntax nodes.
    [[nodiscard]] std::size_t size() const noexcept;
    /// True when the node was produced by normalize_b.
    [[nodiscard]] bool is_normal() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return kind() == RatKind::Zero; }
    [[nodiscard]] bool is_one() const noexcept { return kind() == RatKind::One; }

    /// Concrete syntax; parse_rexp(to_string()) reproduces the same tree.
    [[nodiscard]] std::string to_string() const;
    /// Opaque identity of the underlying node (stable for the value's lifetime).
    [[nodiscard]] const void* identity() const noexcept { return node_.get(); }

    friend bool operator==(const RatExpr& a, const RatExpr& b) noexcept;
    friend std::strong_ordering operator<=>(const RatExpr& a, const RatExpr& b) noexcept;

private:
    struct Node;
    explicit RatExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static RatExpr make(RatKind kind, char symbol, std::vector<RatExpr> kids, bool normal);
    friend RatExpr normalize_b(const RatExpr& t);

    std::shared_ptr<const Node> node_;
};

struct RatExprHash {
    std::size_t operator()(const RatExpr& t) const noexcept { return t.hash(); }
};

/// Element of the sequential splitting relation.
struct SplitPair {
    RatExpr left;
    RatExpr right;
    friend bool operator==(const SplitPair&, const SplitPair&) = default;
    friend auto operator<=>(const SplitPair&, const SplitPair&) = default;
};

/// Parses the concrete grammar; every letter must belong to `sigma`.
/// Throws ParseError (with position) for syntax errors, foreign letters and
/// non-rational input (`@`, `$`).
RatExpr parse_rexp(std::string_view text, const Alphabet& sigma);

inline bool ewp(const RatExpr& t) noexcept { return t.ewp(); }

/// Canonical representative modulo the unit/zero laws and ACI of +:
/// 1.t -> t, t.1 -> t, 0.t -> 0, t.0 -> 0, sums flattened, 0 summands
/// dropped, duplicates removed, summands sorted. Idempotent.
RatExpr normalize_b(const RatExpr& t);

/// Brzozowski derivative by one symbol, normalized.
RatExpr deriv(const RatExpr& t, char a);
/// Left fold of `deriv` over `u`.
RatExpr word_deriv(const RatExpr& t, std::string_view u);

/// Membership by direct structural recursion on the semantics, memoized on
/// (subterm, substring). Shares no code with the derivative machinery.
bool member_naive(const RatExpr& t, std::string_view u);

/// Sequential splitting relation, deduplicated modulo normalize_b and
/// returned in sorted order.
std::vector<SplitPair> split(const RatExpr& t);

/// Every word of length <= max_len in the language of `t`, shortlex order.
std::vector<Word> enumerate_language(const RatExpr& t, const Alphabet& sigma, std::size_t max_len);

/// Letters occurring in `t`, in first-occurrence order.
std::string letters_of(const RatExpr& t);

}  // namespace lassokit

template <>
struct std::hash<lassokit::RatExpr> {
    std::size_t operator()(const lassokit::RatExpr& t) const noexcept { return t.hash(); }
};
