#include "lassokit/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lassokit/errors.hpp"
#include "text_format.hpp"

namespace lassokit {

Dfa::Dfa(Alphabet sigma, std::size_t num_states, State initial)
    : sigma_(std::move(sigma)), initial_(initial), trans_(num_states * sigma_.size(), 0), finals_(num_states, false) {
    if (num_states == 0) throw std::invalid_argument("a DFA needs at least one state");
    if (initial >= num_states) throw std::invalid_argument("initial state out of range");
}

State Dfa::run_from(State q, std::string_view u) const {
    for (char a : u) q = next(q, sigma_.index_of(a));
    return q;
}

void Dfa::set_next(State q, std::size_t letter, State p) {
    if (q >= num_states() || p >= num_states() || letter >= sigma_.size())
        throw std::out_of_range("transition out of range");
    trans_[q * sigma_.size() + letter] = p;
}

void Dfa::set_final(State q, bool accepting) { finals_.at(q) = accepting; }

void Dfa::set_initial(State q) {
    if (q >= num_states()) throw std::out_of_range("initial state out of range");
    initial_ = q;
}

Dfa compile_dfa(const RatExpr& t, const Alphabet& sigma) {
    std::vector<RatExpr> states{normalize_b(t)};
    std::unordered_map<RatExpr, State, RatExprHash> index{{states[0], 0}};
    std::vector<std::vector<State>> edges;
    for (std::size_t q = 0; q < states.size(); ++q) {
        std::vector<State> row;
        for (char a : sigma) {
            RatExpr next = deriv(states[q], a);
            auto [it, inserted] = index.emplace(next, static_cast<State>(states.size()));
            if (inserted) {
                if (states.size() >= kStateCap) throw StateCapError("compile_dfa: state cap exceeded");
                states.push_back(next);
            }
            row.push_back(it->second);
        }
        edges.push_back(std::move(row));
    }
    Dfa d(sigma, states.size(), 0);
    for (State q = 0; q < states.size(); ++q) {
        for (std::size_t i = 0; i < sigma.size(); ++i) d.set_next(q, i, edges[q][i]);
        d.set_final(q, states[q].ewp());
        d.labels.push_back(states[q].to_string());
    }
    return d;
}

Dfa empty_dfa(const Alphabet& sigma) { return Dfa(sigma, 1, 0); }

namespace {

template <typename Pred>
Dfa product(const Dfa& d1, const Dfa& d2, Pred accept) {
    if (!(d1.alphabet() == d2.alphabet())) throw AlphabetMismatch();
    const std::size_t k = d1.alphabet().size();
    std::map<std::pair<State, State>, State> index;
    std::vector<std::pair<State, State>> pairs{{d1.initial(), d2.initial()}};
    index[pairs[0]] = 0;
    std::vector<State> table;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        for (std::size_t a = 0; a < k; ++a) {
            std::pair<State, State> succ{d1.next(p, a), d2.next(q, a)};
            auto [it, inserted] = index.emplace(succ, static_cast<State>(pairs.size()));
            if (inserted) {
                if (pairs.size() >= kStateCap) throw StateCapError("product automaton exceeds state cap");
                pairs.push_back(succ);
            }
            table.push_back(it->second);
        }
    }
    Dfa out(d1.alphabet(), pairs.size(), 0);
    for (State s = 0; s < pairs.size(); ++s) {
        for (std::size_t a = 0; a < k; ++a) out.set_next(s, a, table[s * k + a]);
        out.set_final(s, accept(d1.is_final(pairs[s].first), d2.is_final(pairs[s].second)));
    }
    return out;
}

}  // namespace

Dfa boolean_combine(const Dfa& d1, const Dfa& d2, BoolOp op) {
    switch (op) {
        case BoolOp::And: return product(d1, d2, [](bool x, bool y) { return x && y; });
        case BoolOp::Or: return product(d1, d2, [](bool x, bool y) { return x || y; });
        case BoolOp::Diff: return product(d1, d2, [](bool x, bool y) { return x && !y; });
    }
    throw std::invalid_argument("unknown boolean operation");
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    for (State q = 0; q < d.num_states(); ++q) out.set_final(q, !d.is_final(q));
    return out;
}

EmptinessResult is_empty_dfa(const Dfa& d) {
    const std::size_t k = d.alphabet().size();
    std::vector<std::optional<std::pair<State, std::size_t>>> parent(d.num_states());
    std::vector<bool> seen(d.num_states(), false);
    std::deque<State> queue{d.initial()};
    seen[d.initial()] = true;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        if (d.is_final(q)) {
            Word w;
            for (State cur = q; parent[cur]; cur = parent[cur]->first) w.push_back(d.alphabet()[parent[cur]->second]);
            std::reverse(w.begin(), w.end());
            return {false, w};
        }
        for (std::size_t a = 0; a < k; ++a) {
            State p = d.next(q, a);
            if (!seen[p]) {
                seen[p] = true;
                parent[p] = std::make_pair(q, a);
                queue.push_back(p);
            }
        }
    }
    return {true, std::nullopt};
}

EquivalenceResult equivalent_dfa(const Dfa& d1, const Dfa& d2) {
    auto e = is_empty_dfa(product(d1, d2, [](bool x, bool y) { return x != y; }));
    return {e.empty, e.witness};
}

Dfa left_derivative(const Dfa& d, char a) {
    Dfa out = d;
    out.set_initial(d.next_symbol(d.initial(), a));
    return out;
}

Dfa right_quotient(const Dfa& d, char a) {
    Dfa out = d;
    const std::size_t i = d.alphabet().index_of(a);
    for (State q = 0; q < d.num_states(); ++q) out.set_final(q, d.is_final(d.next(q, i)));
    return out;
}

Dfa minimize(const Dfa& d) {
    const std::size_t k = d.alphabet().size();
    // Reachable part.
    std::vector<State> reach{d.initial()};
    std::vector<int> rindex(d.num_states(), -1);
    rindex[d.initial()] = 0;
    for (std::size_t i = 0; i < reach.size(); ++i)
        for (std::size_t a = 0; a < k; ++a) {
            State p = d.next(reach[i], a);
            if (rindex[p] < 0) {
                rindex[p] = static_cast<int>(reach.size());
                reach.push_back(p);
            }
        }
    const std::size_t n = reach.size();
    std::vector<std::size_t> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = d.is_final(reach[i]) ? 1 : 0;
    std::size_t count = 0;
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> sig_index;
        std::vector<std::size_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> sig{cls[i]};
            for (std::size_t a = 0; a < k; ++a) sig.push_back(cls[rindex[d.next(reach[i], a)]]);
            next[i] = sig_index.emplace(std::move(sig), sig_index.size()).first->second;
        }
        cls.swap(next);
        if (sig_index.size() == count) break;
        count = sig_index.size();
    }
    // Canonical BFS numbering of the classes.
    std::vector<std::size_t> rep(count, n);
    for (std::size_t i = 0; i < n; ++i)
        if (rep[cls[i]] == n) rep[cls[i]] = i;
    std::vector<int> order(count, -1);
    std::vector<std::size_t> queue{cls[0]};
    order[cls[0]] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t a = 0; a < k; ++a) {
            std::size_t c = cls[rindex[d.next(reach[rep[queue[i]]], a)]];
            if (order[c] < 0) {
                order[c] = static_cast<int>(queue.size());
                queue.push_back(c);
            }
        }
    Dfa out(d.alphabet(), count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t c = queue[i];
        State q = reach[rep[c]];
        out.set_final(static_cast<State>(i), d.is_final(q));
        for (std::size_t a = 0; a < k; ++a)
            out.set_next(static_cast<State>(i), a, static_cast<State>(order[cls[rindex[d.next(q, a)]]]));
    }
    return out;
}

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = v.size();
        for (State s : v) h ^= s + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

Dfa root(const Dfa& input) {
    const Dfa d = minimize(input);
    const std::size_t n = d.num_states();
    const std::size_t k = d.alphabet().size();
    // State 0 stands for the empty word; every other state is a reachable
    // transformation f_u with u nonempty.
    std::vector<std::vector<State>> funcs;
    std::unordered_map<std::vector<State>, State, VectorHash> index;
    std::vector<State> table;  // (1 + funcs.size()) * k
    auto intern = [&](std::vector<State> f) {
        auto [it, inserted] = index.emplace(f, static_cast<State>(funcs.size() + 1));
        if (inserted) {
            if (funcs.size() >= kStateCap) throw StateCapError("root: transformation monoid exceeds state cap");
            funcs.push_back(std::move(f));
        }
        return it->second;
    };
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<State> f(n);
        for (State q = 0; q < n; ++q) f[q] = d.next(q, a);
        table.push_back(intern(std::move(f)));
    }
    for (std::size_t i = 0; i < funcs.size(); ++i)
        for (std::size_t a = 0; a < k; ++a) {
            std::vector<State> g(n);
            for (State q = 0; q < n; ++q) g[q] = d.next(funcs[i][q], a);
            table.push_back(intern(std::move(g)));
        }
    Dfa out(d.alphabet(), funcs.size() + 1, 0);
    for (State s = 0; s <= funcs.size(); ++s)
        for (std::size_t a = 0; a < k; ++a) out.set_next(s, a, table[s * k + a]);
    for (std::size_t i = 0; i < funcs.size(); ++i) {
        // The orbit of the initial state repeats within n applications.
        State x = d.initial();
        bool accept = false;
        for (std::size_t step = 0; step < n && !accept; ++step) {
            x = funcs[i][x];
            accept = d.is_final(x);
        }
        out.set_final(static_cast<State>(i + 1), accept);
    }
    return minimize(out);
}

namespace {

RatExpr cat(const RatExpr& x, const RatExpr& y) {
    if (x.is_zero() || y.is_zero()) return RatExpr::zero();
    if (x.is_one()) return y;
    if (y.is_one()) return x;
    if (x.kind() == RatKind::Concat) return cat(x.left(), cat(x.right(), y));
    return RatExpr::concat(x, y);
}

RatExpr alt(const RatExpr& x, const RatExpr& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return normalize_b(RatExpr::sum(x, y));
}

RatExpr star_of(const RatExpr& x) {
    if (x.is_zero() || x.is_one()) return RatExpr::one();
    if (x.kind() == RatKind::Star) return x;
    return RatExpr::star(x);
}

}  // namespace

RatExpr dfa_to_expr(const Dfa& input) {
    const Dfa d = minimize(input);
    const std::size_t n = d.num_states();
    const std::size_t k = d.alphabet().size();
    // Keep states that can reach a final state.
    std::vector<bool> live(n, false);
    for (State q = 0; q < n; ++q) live[q] = d.is_final(q);
    for (bool changed = true; changed;) {
        changed = false;
        for (State q = 0; q < n; ++q)
            if (!live[q])
                for (std::size_t a = 0; a < k; ++a)
                    if (live[d.next(q, a)]) {
                        live[q] = true;
                        changed = true;
                        break;
                    }
    }
    if (!live[d.initial()]) return RatExpr::zero();

    const std::size_t start = n, end = n + 1;
    std::vector<std::vector<RatExpr>> edge(n + 2, std::vector<RatExpr>(n + 2, RatExpr::zero()));
    for (State q = 0; q < n; ++q) {
        if (!live[q]) continue;
        for (std::size_t a = 0; a < k; ++a) {
            State p = d.next(q, a);
            if (live[p]) edge[q][p] = alt(edge[q][p], RatExpr::letter(d.alphabet()[a]));
        }
        if (d.is_final(q)) edge[q][end] = RatExpr::one();
    }
    edge[start][d.initial()] = RatExpr::one();

    std::vector<bool> removed(n + 2, false);
    for (State q = 0; q < n; ++q) removed[q] = !live[q];
    while (true) {
        std::size_t best = n;
        std::size_t best_cost = 0;
        for (std::size_t q = 0; q < n; ++q) {
            if (removed[q]) continue;
            std::size_t in = 0, out = 0;
            for (std::size_t p = 0; p < n + 2; ++p) {
                if (p == q || removed[p]) continue;
                in += !edge[p][q].is_zero();
                out += !edge[q][p].is_zero();
            }
            if (best == n || in * out < best_cost) {
                best = q;
                best_cost = in * out;
            }
        }
        if (best == n) break;
        const std::size_t q = best;
        RatExpr loop = star_of(edge[q][q]);
        for (std::size_t i = 0; i < n + 2; ++i) {
            if (i == q || removed[i] || edge[i][q].is_zero()) continue;
            for (std::size_t j = 0; j < n + 2; ++j) {
                if (j == q || removed[j] || edge[q][j].is_zero()) continue;
                edge[i][j] = alt(edge[i][j], cat(edge[i][q], cat(loop, edge[q][j])));
            }
        }
        removed[q] = true;
        for (std::size_t p = 0; p < n + 2; ++p) edge[p][q] = edge[q][p] = RatExpr::zero();
    }
    RatExpr result = normalize_b(edge[start][end]);
    if (!equivalent_dfa(compile_dfa(result, d.alphabet()), d).equivalent)
        throw CertificationError("dfa_to_expr: extracted expression does not match the automaton");
    return result;
}

bool run_dfa(const Dfa& d, std::string_view u) { return d.is_final(d.run_from(d.initial(), u)); }

std::string dfa_to_dot(const Dfa& d) {
    std::ostringstream out;
    auto name = [&d](State q) {
        return q < d.labels.size() ? d.labels[q] : "q" + std::to_string(q);
    };
    out << "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n";
    for (State q = 0; q < d.num_states(); ++q)
        out << "  s" << q << " [label=\"" << detail::dot_escape(name(q)) << "\", shape="
            << (d.is_final(q) ? "doublecircle" : "circle") << "];\n";
    out << "  __start -> s" << d.initial() << ";\n";
    for (State q = 0; q < d.num_states(); ++q) {
        std::map<State, std::string> merged;
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
            auto& lbl = merged[d.next(q, a)];
            if (!lbl.empty()) lbl += ",";
            lbl += d.alphabet()[a];
        }
        for (const auto& [p, lbl] : merged)
            out << "  s" << q << " -> s" << p << " [label=\"" << lbl << "\", style=solid];\n";
    }
    out << "}\n";
    return out.str();
}

std::string write_dfa(const Dfa& d) {
    std::ostringstream out;
    auto name = [](State q) { return "q" + std::to_string(q); };
    out << "alphabet:";
    for (char c : d.alphabet()) out << ' ' << c;
    out << "\nstates:";
    for (State q = 0; q < d.num_states(); ++q) out << ' ' << name(q);
    out << "\ninitial: " << name(d.initial()) << "\nfinal:";
    for (State q = 0; q < d.num_states(); ++q)
        if (d.is_final(q)) out << ' ' << name(q);
    out << '\n';
    for (State q = 0; q < d.num_states(); ++q)
        for (std::size_t a = 0; a < d.alphabet().size(); ++a)
            out << "t: " << name(q) << ' ' << d.alphabet()[a] << ' ' << name(d.next(q, a)) << '\n';
    return out.str();
}

Dfa read_dfa(std::string_view text) {
    auto directives = detail::read_directives(text);
    std::string letters;
    std::vector<std::string> states;
    std::optional<std::string> initial;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> finals, rows;
    for (auto& dir : directives) {
        if (dir.key == "alphabet") {
            for (auto& v : dir.values) {
                if (v.size() != 1) throw FormatError("alphabet symbols must be single letters", dir.line);
                letters += v;
            }
        } else if (dir.key == "states") {
            states.insert(states.end(), dir.values.begin(), dir.values.end());
        } else if (dir.key == "initial") {
            if (dir.values.size() != 1 || initial) throw FormatError("exactly one initial state expected", dir.line);
            initial = dir.values[0];
        } else if (dir.key == "final") {
            finals.emplace_back(dir.line, dir.values);
        } else if (dir.key == "t") {
            if (dir.values.size() != 3) throw FormatError("transition rows have the form 't: src symbol dst'", dir.line);
            rows.emplace_back(dir.line, dir.values);
        } else {
            throw FormatError("unknown key '" + dir.key + "'", dir.line);
        }
    }
    Alphabet sigma;
    try {
        sigma = Alphabet(letters);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what(), 0);
    }
    if (states.empty()) throw FormatError("no states declared", 0);
    if (!initial) throw FormatError("no initial state declared", 0);
    std::map<std::string, State> id;
    for (auto& s : states)
        if (!id.emplace(s, static_cast<State>(id.size())).second) throw FormatError("duplicate state '" + s + "'", 0);
    auto lookup = [&id](const std::string& s, std::size_t line) {
        auto it = id.find(s);
        if (it == id.end()) throw FormatError("unknown state '" + s + "'", line);
        return it->second;
    };
    Dfa d(sigma, states.size(), lookup(*initial, 0));
    for (auto& [line, vals] : finals)
        for (auto& v : vals) d.set_final(lookup(v, line));
    std::set<std::pair<State, std::size_t>> defined;
    for (auto& [line, vals] : rows) {
        State q = lookup(vals[0], line);
        if (vals[1].size() != 1 || !sigma.contains(vals[1][0]))
            throw FormatError("unknown symbol '" + vals[1] + "'", line);
        std::size_t a = sigma.index_of(vals[1][0]);
        if (!defined.emplace(q, a).second)
            throw FormatError("duplicate transition for (" + vals[0] + ", " + vals[1] + ")", line);
        d.set_next(q, a, lookup(vals[2], line));
    }
    for (State q = 0; q < states.size(); ++q)
        for (std::size_t a = 0; a < sigma.size(); ++a)
            if (!defined.count({q, a}))
                throw FormatError("missing transition for (" + states[q] + ", " + std::string(1, sigma[a]) + ")", 0);
    d.labels = states;
    return d;
}

}  // namespace lassokit
