#include "lassokit/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace lassokit {

Alphabet::Alphabet(std::string_view letters) {
    if (letters.empty()) throw std::invalid_argument("alphabet must be nonempty");
    for (char c : letters) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument(std::string("alphabet symbol out of range a-z: '") + c + "'");
        if (index_[c - 'a'] >= 0)
            throw std::invalid_argument(std::string("duplicate alphabet symbol '") + c + "'");
        index_[c - 'a'] = static_cast<int>(letters_.size());
        letters_.push_back(c);
    }
}

Alphabet Alphabet::infer(std::string_view text) {
    std::string seen;
    for (char c : text)
        if (c >= 'a' && c <= 'z' && seen.find(c) == std::string::npos) seen.push_back(c);
    std::sort(seen.begin(), seen.end());
    if (seen.empty()) seen = "a";
    return Alphabet(seen);
}

bool Alphabet::contains(char c) const noexcept {
    return c >= 'a' && c <= 'z' && index_[c - 'a'] >= 0;
}

std::size_t Alphabet::index_of(char c) const {
    if (!contains(c)) throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
    return static_cast<std::size_t>(index_[c - 'a']);
}

bool Alphabet::contains_all(std::string_view word) const noexcept {
    return std::all_of(word.begin(), word.end(), [this](char c) { return contains(c); });
}

std::vector<Word> all_words(const Alphabet& sigma, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (char c : sigma) out.push_back(out[i] + c);
        level_begin = level_end;
    }
    return out;
}

}  // namespace lassokit
