#include "lassokit/omega.hpp"

#include <map>
#include <tuple>

#include "lassokit/dfa.hpp"
#include "lassokit/errors.hpp"

namespace lassokit {

struct OmegaExpr::Node {
    OmegaKind kind;
    RatExpr rat;
    std::vector<OmegaExpr> kids;
};

OmegaExpr OmegaExpr::zero() {
    static const OmegaExpr z(std::make_shared<const Node>(Node{OmegaKind::Zero, RatExpr::zero(), {}}));
    return z;
}

OmegaExpr OmegaExpr::sum(OmegaExpr left, OmegaExpr right) {
    return OmegaExpr(
        std::make_shared<const Node>(Node{OmegaKind::Sum, RatExpr::zero(), {std::move(left), std::move(right)}}));
}

OmegaExpr OmegaExpr::prefix(RatExpr t, OmegaExpr rest) {
    return OmegaExpr(std::make_shared<const Node>(Node{OmegaKind::Prefix, std::move(t), {std::move(rest)}}));
}

OmegaExpr OmegaExpr::power(RatExpr r) {
    if (r.ewp()) throw SideConditionError("operand of '$' accepts the empty word: " + r.to_string());
    return OmegaExpr(std::make_shared<const Node>(Node{OmegaKind::Power, std::move(r), {}}));
}

OmegaExpr::OmegaExpr() : OmegaExpr(zero()) {}

OmegaKind OmegaExpr::kind() const noexcept { return node_->kind; }
const RatExpr& OmegaExpr::rat() const noexcept { return node_->rat; }
const OmegaExpr& OmegaExpr::rest() const noexcept { return node_->kids.front(); }
const OmegaExpr& OmegaExpr::left() const noexcept { return node_->kids.front(); }
const OmegaExpr& OmegaExpr::right() const noexcept { return node_->kids.back(); }

bool operator==(const OmegaExpr& a, const OmegaExpr& b) {
    if (a.node_ == b.node_) return true;
    return a.kind() == b.kind() && a.rat() == b.rat() && a.node_->kids == b.node_->kids;
}

std::string OmegaExpr::to_string() const {
    switch (kind()) {
        case OmegaKind::Zero: return "0";
        case OmegaKind::Power: {
            bool compound = rat().kind() == RatKind::Sum || rat().kind() == RatKind::Concat;
            return compound ? "(" + rat().to_string() + ")$" : rat().to_string() + "$";
        }
        case OmegaKind::Prefix: {
            std::string t = rat().kind() == RatKind::Sum ? "(" + rat().to_string() + ")" : rat().to_string();
            bool wrap = rest().kind() == OmegaKind::Sum || rest().kind() == OmegaKind::Prefix;
            return t + (wrap ? "(" + rest().to_string() + ")" : rest().to_string());
        }
        case OmegaKind::Sum: {
            std::string r = right().to_string();
            if (right().kind() == OmegaKind::Sum) r = "(" + r + ")";
            return left().to_string() + "+" + r;
        }
    }
    return "0";
}

std::string letters_of(const OmegaExpr& T) {
    std::string out;
    auto add = [&out](const std::string& s) {
        for (char c : s)
            if (out.find(c) == std::string::npos) out.push_back(c);
    };
    switch (T.kind()) {
        case OmegaKind::Zero: break;
        case OmegaKind::Power: add(letters_of(T.rat())); break;
        case OmegaKind::Prefix:
            add(letters_of(T.rat()));
            add(letters_of(T.rest()));
            break;
        case OmegaKind::Sum:
            add(letters_of(T.left()));
            add(letters_of(T.right()));
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Buchi oracle

State Nba::add_state(bool is_initial, bool is_accepting) {
    succ.emplace_back(alphabet.size());
    initial.push_back(is_initial);
    accepting.push_back(is_accepting);
    return static_cast<State>(succ.size() - 1);
}

namespace {

/// Copies the DFA into `nba` as non-initial, non-accepting states and
/// returns the offset of its first state.
State embed(Nba& nba, const Dfa& d) {
    const State base = static_cast<State>(nba.num_states());
    for (State q = 0; q < d.num_states(); ++q) nba.add_state(false, false);
    for (State q = 0; q < d.num_states(); ++q)
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) nba.succ[base + q][a].push_back(base + d.next(q, a));
    return base;
}

void build(Nba& nba, const OmegaExpr& T, std::vector<State>& starts) {
    const std::size_t k = nba.alphabet.size();
    switch (T.kind()) {
        case OmegaKind::Zero: return;
        case OmegaKind::Sum:
            build(nba, T.left(), starts);
            build(nba, T.right(), starts);
            return;
        case OmegaKind::Power: {
            // r$: a fresh accepting hub s. Reading a word of r from s leads
            // back to s, so s is revisited after every r-block.
            const Dfa d = compile_dfa(T.rat(), nba.alphabet);
            const State base = embed(nba, d);
            const State hub = nba.add_state(false, true);
            for (State q = 0; q < d.num_states(); ++q)
                for (std::size_t a = 0; a < k; ++a)
                    if (d.is_final(d.next(q, a))) nba.succ[base + q][a].push_back(hub);
            for (std::size_t a = 0; a < k; ++a) {
                State p = d.next(d.initial(), a);
                nba.succ[hub][a].push_back(base + p);
                if (d.is_final(p)) nba.succ[hub][a].push_back(hub);
            }
            starts.push_back(hub);
            return;
        }
        case OmegaKind::Prefix: {
            std::vector<State> inner;
            build(nba, T.rest(), inner);
            const Dfa d = compile_dfa(T.rat(), nba.alphabet);
            const State base = embed(nba, d);
            // A final state of t continues exactly like the starts of the rest.
            for (State q = 0; q < d.num_states(); ++q) {
                if (!d.is_final(q)) continue;
                for (State s : inner)
                    for (std::size_t a = 0; a < k; ++a) {
                        auto targets = nba.succ[s][a];
                        auto& out = nba.succ[base + q][a];
                        out.insert(out.end(), targets.begin(), targets.end());
                    }
            }
            starts.push_back(base + d.initial());
            return;
        }
    }
}

}  // namespace

Nba to_nba(const OmegaExpr& T, const Alphabet& sigma) {
    Nba nba;
    nba.alphabet = sigma;
    std::vector<State> starts;
    build(nba, T, starts);
    for (State s : starts) nba.initial[s] = true;
    return nba;
}

bool up_member(const Nba& nba, const Lasso& l) {
    const Word word = l.spoke() + l.loop();
    if (!nba.alphabet.contains_all(word)) return false;
    const std::size_t n = word.size();
    const std::size_t m = nba.num_states();
    const std::size_t loop_start = l.spoke().size();
    auto next_pos = [&](std::size_t p) { return p + 1 < n ? p + 1 : loop_start; };
    auto id = [n](State q, std::size_t p) { return q * n + p; };

    std::vector<std::vector<std::size_t>> adj(m * n);
    for (State q = 0; q < m; ++q)
        for (std::size_t p = 0; p < n; ++p)
            for (State q2 : nba.succ[q][nba.alphabet.index_of(word[p])]) adj[id(q, p)].push_back(id(q2, next_pos(p)));

    auto reach_from = [&](const std::vector<std::size_t>& seeds) {
        std::vector<bool> seen(m * n, false);
        std::vector<std::size_t> stack;
        for (auto s : seeds)
            if (!seen[s]) seen[s] = true, stack.push_back(s);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj[v])
                if (!seen[w]) seen[w] = true, stack.push_back(w);
        }
        return seen;
    };

    std::vector<std::size_t> seeds;
    for (State q = 0; q < m; ++q)
        if (nba.initial[q]) seeds.push_back(id(q, 0));
    const auto reachable = reach_from(seeds);
    for (State q = 0; q < m; ++q) {
        if (!nba.accepting[q]) continue;
        for (std::size_t p = loop_start; p < n; ++p) {
            const std::size_t v = id(q, p);
            if (!reachable[v]) continue;
            if (reach_from(adj[v])[v]) return true;
        }
    }
    return false;
}

bool up_member(const OmegaExpr& T, const Lasso& l) {
    std::string letters = letters_of(T) + l.spoke() + l.loop();
    return up_member(to_nba(T, Alphabet::infer(letters)), l);
}

// ---------------------------------------------------------------------------
// Representation pipeline

DisjunctiveForm h_map(const OmegaExpr& T) {
    switch (T.kind()) {
        case OmegaKind::Zero: return {};
        case OmegaKind::Sum: return h_map(T.left()) + h_map(T.right());
        case OmegaKind::Prefix: {
            const DisjunctiveForm inner = h_map(T.rest());
            std::vector<LassoPair> out;
            for (const auto& p : inner.pairs()) out.push_back({RatExpr::concat(T.rat(), p.spoke), p.loop});
            return DisjunctiveForm(std::move(out));
        }
        case OmegaKind::Power: {
            const RatExpr& t = T.rat();
            const RatExpr ts = RatExpr::star(t);
            std::vector<LassoPair> out;
            for (const auto& [t0, t1] : split(t)) {
                RatExpr loop = normalize_b(RatExpr::concat(t1, RatExpr::concat(ts, t0)));
                if (loop.ewp()) throw CertificationError("h_map: loop with the empty word from " + t.to_string());
                out.push_back({RatExpr::concat(ts, t0), loop});
            }
            return DisjunctiveForm(std::move(out));
        }
    }
    return {};
}

DisjunctiveForm gamma_map(const DisjunctiveForm& df, const Alphabet& sigma) {
    // Loops only depend on (t1', s1', s0'); cache them.
    std::map<std::tuple<RatExpr, RatExpr, RatExpr>, RatExpr> cache;
    auto loop_for = [&](const RatExpr& t1, const RatExpr& s1, const RatExpr& s0) {
        auto key = std::make_tuple(t1, s1, s0);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        Dfa meet = boolean_combine(compile_dfa(t1, sigma), compile_dfa(s1, sigma), BoolOp::And);
        RatExpr body = normalize_b(RatExpr::concat(dfa_to_expr(meet), s0));
        RatExpr loop = body.is_zero() ? RatExpr::zero() : dfa_to_expr(root(compile_dfa(body, sigma)));
        if (loop.ewp()) throw CertificationError("gamma_map: root produced the empty word");
        cache.emplace(key, loop);
        return loop;
    };
    std::vector<LassoPair> out;
    for (const auto& p : df.pairs()) {
        const auto spoke_splits = split(p.spoke);
        const auto loop_splits = split(p.loop);
        for (const auto& [t0, t1] : spoke_splits)
            for (const auto& [s0, s1] : loop_splits) {
                RatExpr loop = loop_for(t1, s1, s0);
                if (!loop.is_zero()) out.push_back({t0, loop});
            }
    }
    return DisjunctiveForm(std::move(out));
}

DisjunctiveForm gamma_iterate(const DisjunctiveForm& df, const Alphabet& sigma, std::size_t max_rounds) {
    DisjunctiveForm cur = df;
    for (std::size_t i = 0; i < max_rounds; ++i) {
        DisjunctiveForm next = gamma_map(cur, sigma);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

DisjunctiveForm represent(const OmegaExpr& T, const Alphabet& sigma) { return gamma_map(h_map(T), sigma); }

LassoAutomaton omega_to_omega_automaton(const OmegaExpr& T, const Alphabet& sigma) {
    LassoAutomaton A = compile_lasso(represent(T, sigma), sigma);
    if (auto s = is_saturated(A); !s.saturated)
        throw CertificationError("omega_to_omega_automaton: result is not saturated (" +
                                 s.counterexample->first.to_string() + " vs " + s.counterexample->second.to_string() +
                                 ")");
    return A;
}

}  // namespace lassokit
