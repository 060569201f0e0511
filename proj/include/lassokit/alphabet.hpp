#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lassokit {

/// Finite word over an Alphabet; the empty string is the empty word.
using Word = std::string;

/// Ordered set of single-letter symbols drawn from a-z.
///
/// The order is significant: every construction in the library iterates
/// letters in this order, which makes state numbering and shortest
/// witnesses deterministic.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view letters);

    /// Sorted, deduplicated alphabet of the letters occurring in `text`.
    static Alphabet infer(std::string_view text);

    [[nodiscard]] const std::string& letters() const noexcept { return letters_; }
    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
    [[nodiscard]] char operator[](std::size_t i) const { return letters_[i]; }
    [[nodiscard]] bool contains(char c) const noexcept;
    /// Position of `c`; throws std::invalid_argument for foreign symbols.
    [[nodiscard]] std::size_t index_of(char c) const;
    [[nodiscard]] bool contains_all(std::string_view word) const noexcept;

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string letters_;
    int index_[26] = {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
                      -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1};
};

/// All words over `sigma` of length at most `max_len`, in shortlex order.
std::vector<Word> all_words(const Alphabet& sigma, std::size_t max_len);

}  // namespace lassokit
