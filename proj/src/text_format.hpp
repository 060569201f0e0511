#pragma once

// Shared reader for the line-oriented `key: value ...` automaton formats.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lassokit/errors.hpp"

namespace lassokit::detail {

struct Directive {
    std::size_t line;
    std::string key;
    std::vector<std::string> values;
};

inline std::vector<Directive> read_directives(std::string_view text) {
    std::vector<Directive> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = raw.find(':');
        if (colon == std::string::npos) throw FormatError("expected 'key: values'", lineno);
        Directive d{lineno, {}, {}};
        std::istringstream key(raw.substr(0, colon));
        key >> d.key;
        std::string extra;
        if (d.key.empty() || (key >> extra)) throw FormatError("malformed key", lineno);
        std::istringstream vals(raw.substr(colon + 1));
        for (std::string v; vals >> v;) d.values.push_back(v);
        out.push_back(std::move(d));
    }
    return out;
}

inline std::string join(const std::vector<std::string>& items, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace lassokit::detail
