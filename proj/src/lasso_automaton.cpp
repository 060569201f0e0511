#include "lassokit/lasso_automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "lassokit/errors.hpp"
#include "text_format.hpp"

namespace lassokit {

LassoAutomaton::LassoAutomaton(Alphabet sigma, std::size_t num_spoke, std::size_t num_loop, State initial)
    : sigma_(std::move(sigma)),
      num_spoke_(num_spoke),
      initial_(initial),
      d1_(num_spoke * sigma_.size(), 0),
      d2_(num_spoke * sigma_.size(), 0),
      d3_(num_loop * sigma_.size(), 0),
      finals_(num_loop, false) {
    if (num_spoke == 0 || num_loop == 0) throw std::invalid_argument("a lasso automaton needs spoke and loop states");
    if (initial >= num_spoke) throw std::invalid_argument("initial state out of range");
    for (std::size_t x = 0; x < num_spoke; ++x) spoke_names.push_back("x" + std::to_string(x));
    for (std::size_t y = 0; y < num_loop; ++y) loop_names.push_back("y" + std::to_string(y));
}

void LassoAutomaton::set_spoke_next(State x, std::size_t letter, State x2) {
    if (x >= num_spoke_ || x2 >= num_spoke_ || letter >= sigma_.size()) throw std::out_of_range("spoke transition");
    d1_[x * sigma_.size() + letter] = x2;
}

void LassoAutomaton::set_switch_next(State x, std::size_t letter, State y) {
    if (x >= num_spoke_ || y >= num_loop() || letter >= sigma_.size()) throw std::out_of_range("switch transition");
    d2_[x * sigma_.size() + letter] = y;
}

void LassoAutomaton::set_loop_next(State y, std::size_t letter, State y2) {
    if (y >= num_loop() || y2 >= num_loop() || letter >= sigma_.size()) throw std::out_of_range("loop transition");
    d3_[y * sigma_.size() + letter] = y2;
}

void LassoAutomaton::set_final(State y, bool accepting) { finals_.at(y) = accepting; }

void LassoAutomaton::set_initial(State x) {
    if (x >= num_spoke_) throw std::out_of_range("initial state out of range");
    initial_ = x;
}

State LassoAutomaton::read_spoke(State x, std::string_view u) const {
    for (char a : u) x = spoke_next(x, sigma_.index_of(a));
    return x;
}

State LassoAutomaton::read_loop(State x, std::string_view v) const {
    if (v.empty()) throw std::invalid_argument("loop word must be nonempty");
    State y = switch_next(x, sigma_.index_of(v[0]));
    for (char a : v.substr(1)) y = loop_next(y, sigma_.index_of(a));
    return y;
}

bool accepts(const LassoAutomaton& A, const Lasso& l) {
    return A.is_final(A.read_loop(A.read_spoke(A.initial(), l.spoke()), l.loop()));
}

std::vector<std::pair<State, Word>> reachable_spokes(const LassoAutomaton& A) {
    std::vector<std::pair<State, Word>> out{{A.initial(), ""}};
    std::vector<bool> seen(A.num_spoke(), false);
    seen[A.initial()] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t a = 0; a < A.alphabet().size(); ++a) {
            State x = A.spoke_next(out[i].first, a);
            if (!seen[x]) {
                seen[x] = true;
                out.emplace_back(x, out[i].second + A.alphabet()[a]);
            }
        }
    return out;
}

namespace {

Dfa loop_dfa_impl(const LassoAutomaton& A, State x, const std::vector<bool>& finals) {
    const std::size_t k = A.alphabet().size();
    Dfa d(A.alphabet(), A.num_loop() + 1, 0);
    d.labels.push_back("(" + A.spoke_names[x] + ")");
    for (std::size_t a = 0; a < k; ++a) d.set_next(0, a, A.switch_next(x, a) + 1);
    for (State y = 0; y < A.num_loop(); ++y) {
        d.labels.push_back(A.loop_names[y]);
        d.set_final(y + 1, finals[y]);
        for (std::size_t a = 0; a < k; ++a) d.set_next(y + 1, a, A.loop_next(y, a) + 1);
    }
    return d;
}

}  // namespace

Dfa loop_dfa(const LassoAutomaton& A, State x) {
    std::vector<bool> finals(A.num_loop());
    for (State y = 0; y < A.num_loop(); ++y) finals[y] = A.is_final(y);
    return loop_dfa_impl(A, x, finals);
}

Dfa loop_dfa_to(const LassoAutomaton& A, State x, State target) {
    std::vector<bool> finals(A.num_loop(), false);
    finals.at(target) = true;
    return loop_dfa_impl(A, x, finals);
}

Dfa spoke_lang_dfa(const LassoAutomaton& A, State x) {
    Dfa d(A.alphabet(), A.num_spoke(), A.initial());
    for (State q = 0; q < A.num_spoke(); ++q)
        for (std::size_t a = 0; a < A.alphabet().size(); ++a) d.set_next(q, a, A.spoke_next(q, a));
    d.set_final(x);
    d.labels = A.spoke_names;
    return d;
}

namespace {

/// Shortest (then lexicographically least) loop word on which the two
/// automata disagree when started from spoke states x1 and x2.
std::optional<Word> loop_disagreement(const LassoAutomaton& A1, State x1, const LassoAutomaton& A2, State x2) {
    const std::size_t k = A1.alphabet().size();
    using Pair = std::pair<State, State>;
    std::map<Pair, std::pair<std::size_t, std::size_t>> parent;  // node -> (parent index, letter)
    std::vector<Pair> order;
    for (std::size_t a = 0; a < k; ++a) {
        Pair p{A1.switch_next(x1, a), A2.switch_next(x2, a)};
        if (parent.emplace(p, std::make_pair(std::size_t(-1), a)).second) order.push_back(p);
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [y1, y2] = order[i];
        if (A1.is_final(y1) != A2.is_final(y2)) {
            Word w;
            for (std::size_t j = i;;) {
                auto [par, letter] = parent.at(order[j]);
                w.push_back(A1.alphabet()[letter]);
                if (par == std::size_t(-1)) break;
                j = par;
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (std::size_t a = 0; a < k; ++a) {
            Pair p{A1.loop_next(y1, a), A2.loop_next(y2, a)};
            if (parent.emplace(p, std::make_pair(i, a)).second) order.push_back(p);
        }
    }
    return std::nullopt;
}

bool shorter(const Lasso& a, const Lasso& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return std::tie(a.spoke(), a.loop()) < std::tie(b.spoke(), b.loop());
}

}  // namespace

LassoEquivalence equivalent_lasso(const LassoAutomaton& A1, const LassoAutomaton& A2) {
    if (!(A1.alphabet() == A2.alphabet())) throw AlphabetMismatch();
    const std::size_t k = A1.alphabet().size();
    using Pair = std::pair<State, State>;
    std::vector<std::pair<Pair, Word>> order{{{A1.initial(), A2.initial()}, ""}};
    std::set<Pair> seen{order[0].first};
    std::optional<Lasso> best;
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto [pair, u] = order[i];
        // BFS visits spoke words in order of length, so once |u| alone is
        // not below the best total no later pair can improve on it.
        if (best && u.size() >= best->length()) break;
        if (auto v = loop_disagreement(A1, pair.first, A2, pair.second)) {
            Lasso candidate(u, *v);
            if (!best || shorter(candidate, *best)) best = candidate;
        }
        for (std::size_t a = 0; a < k; ++a) {
            Pair next{A1.spoke_next(pair.first, a), A2.spoke_next(pair.second, a)};
            if (seen.insert(next).second) order.emplace_back(next, u + A1.alphabet()[a]);
        }
    }
    return {!best.has_value(), best};
}

std::string write_automaton(const LassoAutomaton& A) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : A.alphabet()) out << ' ' << c;
    out << "\nspoke: " << detail::join(A.spoke_names) << "\nloop: " << detail::join(A.loop_names)
        << "\ninitial: " << A.spoke_names[A.initial()] << "\nfinal:";
    for (State y = 0; y < A.num_loop(); ++y)
        if (A.is_final(y)) out << ' ' << A.loop_names[y];
    out << '\n';
    const std::size_t k = A.alphabet().size();
    for (State x = 0; x < A.num_spoke(); ++x)
        for (std::size_t a = 0; a < k; ++a)
            out << "d1: " << A.spoke_names[x] << ' ' << A.alphabet()[a] << ' '
                << A.spoke_names[A.spoke_next(x, a)] << '\n';
    for (State x = 0; x < A.num_spoke(); ++x)
        for (std::size_t a = 0; a < k; ++a)
            out << "d2: " << A.spoke_names[x] << ' ' << A.alphabet()[a] << ' '
                << A.loop_names[A.switch_next(x, a)] << '\n';
    for (State y = 0; y < A.num_loop(); ++y)
        for (std::size_t a = 0; a < k; ++a)
            out << "d3: " << A.loop_names[y] << ' ' << A.alphabet()[a] << ' '
                << A.loop_names[A.loop_next(y, a)] << '\n';
    return out.str();
}

LassoAutomaton read_automaton(std::string_view text) {
    auto directives = detail::read_directives(text);
    std::string letters;
    std::vector<std::string> spokes, loops;
    std::vector<std::size_t> spoke_lines, loop_lines;
    std::optional<std::pair<std::size_t, std::string>> initial;
    std::vector<std::pair<std::size_t, std::string>> finals;
    struct Row {
        std::size_t line;
        int table;
        std::vector<std::string> vals;
    };
    std::vector<Row> rows;
    std::size_t alphabet_line = 0;
    for (auto& dir : directives) {
        if (dir.key == "alphabet") {
            alphabet_line = dir.line;
            for (auto& v : dir.values) {
                if (v.size() != 1) throw FormatError("alphabet symbols must be single letters", dir.line);
                letters += v;
            }
        } else if (dir.key == "spoke") {
            spokes.insert(spokes.end(), dir.values.begin(), dir.values.end());
            spoke_lines.resize(spokes.size(), dir.line);
        } else if (dir.key == "loop") {
            loops.insert(loops.end(), dir.values.begin(), dir.values.end());
            loop_lines.resize(loops.size(), dir.line);
        } else if (dir.key == "initial") {
            if (dir.values.size() != 1 || initial) throw FormatError("exactly one initial state expected", dir.line);
            initial = std::make_pair(dir.line, dir.values[0]);
        } else if (dir.key == "final") {
            for (auto& v : dir.values) finals.emplace_back(dir.line, v);
        } else if (dir.key == "d1" || dir.key == "d2" || dir.key == "d3") {
            if (dir.values.size() != 3)
                throw FormatError("transition rows have the form '" + dir.key + ": src symbol dst'", dir.line);
            rows.push_back({dir.line, dir.key[1] - '0', dir.values});
        } else {
            throw FormatError("unknown key '" + dir.key + "'", dir.line);
        }
    }
    Alphabet sigma;
    try {
        sigma = Alphabet(letters);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what(), alphabet_line);
    }
    if (spokes.empty()) throw FormatError("no spoke states declared", 0);
    if (loops.empty()) throw FormatError("no loop states declared", 0);
    if (!initial) throw FormatError("no initial state declared", 0);

    std::map<std::string, State> xs, ys;
    for (std::size_t i = 0; i < spokes.size(); ++i)
        if (!xs.emplace(spokes[i], static_cast<State>(xs.size())).second)
            throw FormatError("duplicate spoke state '" + spokes[i] + "'", spoke_lines[i]);
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const auto& s = loops[i];
        if (xs.count(s)) throw FormatError("state '" + s + "' is declared both as spoke and loop state", loop_lines[i]);
        if (!ys.emplace(s, static_cast<State>(ys.size())).second)
            throw FormatError("duplicate loop state '" + s + "'", loop_lines[i]);
    }
    auto spoke_id = [&xs](const std::string& s, std::size_t line) {
        auto it = xs.find(s);
        if (it == xs.end()) throw FormatError("unknown spoke state '" + s + "'", line);
        return it->second;
    };
    auto loop_id = [&ys](const std::string& s, std::size_t line) {
        auto it = ys.find(s);
        if (it == ys.end()) throw FormatError("unknown loop state '" + s + "'", line);
        return it->second;
    };

    LassoAutomaton A(sigma, spokes.size(), loops.size(), spoke_id(initial->second, initial->first));
    A.spoke_names = spokes;
    A.loop_names = loops;
    for (auto& [line, name] : finals) A.set_final(loop_id(name, line));

    std::set<std::tuple<int, State, std::size_t>> defined;
    for (auto& row : rows) {
        const auto& v = row.vals;
        State src = row.table == 3 ? loop_id(v[0], row.line) : spoke_id(v[0], row.line);
        if (v[1].size() != 1 || !sigma.contains(v[1][0])) throw FormatError("unknown symbol '" + v[1] + "'", row.line);
        std::size_t a = sigma.index_of(v[1][0]);
        if (!defined.emplace(row.table, src, a).second)
            throw FormatError("duplicate d" + std::to_string(row.table) + " row for (" + v[0] + ", " + v[1] + ")",
                              row.line);
        if (row.table == 1) A.set_spoke_next(src, a, spoke_id(v[2], row.line));
        else if (row.table == 2) A.set_switch_next(src, a, loop_id(v[2], row.line));
        else A.set_loop_next(src, a, loop_id(v[2], row.line));
    }
    for (int table = 1; table <= 3; ++table) {
        const auto& names = table == 3 ? loops : spokes;
        for (State q = 0; q < names.size(); ++q)
            for (std::size_t a = 0; a < sigma.size(); ++a)
                if (!defined.count({table, q, a}))
                    throw FormatError("missing d" + std::to_string(table) + " row for (" + names[q] + ", " +
                                          std::string(1, sigma[a]) + ")",
                                      0);
    }
    return A;
}

std::string to_dot(const LassoAutomaton& A) {
    std::ostringstream out;
    const std::size_t k = A.alphabet().size();
    auto edges = [&](const std::string& src, auto next, const std::vector<std::string>& names, const char* style) {
        std::map<State, std::string> merged;
        for (std::size_t a = 0; a < k; ++a) {
            auto& lbl = merged[next(a)];
            if (!lbl.empty()) lbl += ",";
            lbl += A.alphabet()[a];
        }
        for (const auto& [dst, lbl] : merged)
            out << "  \"" << detail::dot_escape(src) << "\" -> \"" << detail::dot_escape(names[dst])
                << "\" [label=\"" << lbl << "\", style=" << style << "];\n";
    };
    out << "digraph lasso {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (State x = 0; x < A.num_spoke(); ++x)
        out << "  \"" << detail::dot_escape(A.spoke_names[x]) << "\" [shape=circle];\n";
    for (State y = 0; y < A.num_loop(); ++y)
        out << "  \"" << detail::dot_escape(A.loop_names[y]) << "\" [shape="
            << (A.is_final(y) ? "doublecircle" : "circle") << "];\n";
    out << "  __start -> \"" << detail::dot_escape(A.spoke_names[A.initial()]) << "\";\n";
    for (State x = 0; x < A.num_spoke(); ++x) {
        edges(A.spoke_names[x], [&](std::size_t a) { return A.spoke_next(x, a); }, A.spoke_names, "solid");
        edges(A.spoke_names[x], [&](std::size_t a) { return A.switch_next(x, a); }, A.loop_names, "dotted");
    }
    for (State y = 0; y < A.num_loop(); ++y)
        edges(A.loop_names[y], [&](std::size_t a) { return A.loop_next(y, a); }, A.loop_names, "dashed");
    out << "}\n";
    return out.str();
}

}  // namespace lassokit
