#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lassokit/alphabet.hpp"

namespace lassokit {

/// A pair (spoke, loop) standing for the ultimately periodic word
/// spoke.loop^omega. The loop is never empty.
class Lasso {
public:
    Lasso(Word spoke, Word loop);

    /// Parses the literal `spoke:loop`, e.g. `aaa:baa` or `:b`.
    static Lasso parse(std::string_view text);

    [[nodiscard]] const Word& spoke() const noexcept { return spoke_; }
    [[nodiscard]] const Word& loop() const noexcept { return loop_; }
    [[nodiscard]] std::size_t length() const noexcept { return spoke_.size() + loop_.size(); }
    [[nodiscard]] std::string to_string() const { return spoke_ + ":" + loop_; }

    friend bool operator==(const Lasso&, const Lasso&) = default;
    friend auto operator<=>(const Lasso&, const Lasso&) = default;

private:
    Word spoke_;
    Word loop_;
};

/// Shortest w with v = w^k for some k >= 1.
Word primitive_root(std::string_view v);

/// One rewrite step, trying the rotation rule (ua, va) -> (u, av) before the
/// power rule (u, w^k) -> (u, w). The power rule jumps straight to the
/// primitive root. Empty when `l` is already in normal form.
std::optional<Lasso> reduce_step(const Lasso& l);

/// The unique normal form under the rewrite system.
Lasso normal_form(const Lasso& l);

/// Same normal form, i.e. the same ultimately periodic word.
bool gamma_equiv(const Lasso& a, const Lasso& b);

/// Compares the ultimately periodic words directly on a finite prefix of
/// length max(|u1|,|u2|) + lcm(|v1|,|v2|). Independent of the rewrite system.
bool up_equal(const Lasso& a, const Lasso& b);

/// The single rotation expansion (spoke.a, v.a) for loop = a.v, followed by
/// the power expansions (spoke, loop^k) for 2 <= k <= k_max.
std::vector<Lasso> expansions(const Lasso& l, std::size_t k_max);

/// Every lasso with |spoke| <= max_spoke and 1 <= |loop| <= max_loop,
/// spoke-major in shortlex order.
std::vector<Lasso> enumerate_lassos(const Alphabet& sigma, std::size_t max_spoke, std::size_t max_loop);

/// All lassos gamma-equivalent to `l` whose spoke and loop lengths stay
/// within the given bounds.
std::vector<Lasso> equivalent_lassos(const Lasso& l, std::size_t max_spoke, std::size_t max_loop);

}  // namespace lassokit
