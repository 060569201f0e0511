#include "lassokit/lassoexp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "lassokit/errors.hpp"

namespace lassokit {

struct LassoExpr::Node {
    LassoKind kind;
    RatExpr rat;
    std::vector<LassoExpr> kids;
};

LassoExpr LassoExpr::zero() {
    static const LassoExpr z(std::make_shared<const Node>(Node{LassoKind::Zero, RatExpr::zero(), {}}));
    return z;
}

LassoExpr LassoExpr::circle(RatExpr r) {
    if (r.ewp()) throw SideConditionError("operand of '@' accepts the empty word: " + r.to_string());
    return LassoExpr(std::make_shared<const Node>(Node{LassoKind::Circle, std::move(r), {}}));
}

LassoExpr LassoExpr::prefix(RatExpr t, LassoExpr rest) {
    return LassoExpr(std::make_shared<const Node>(Node{LassoKind::Prefix, std::move(t), {std::move(rest)}}));
}

LassoExpr LassoExpr::sum(LassoExpr left, LassoExpr right) {
    return LassoExpr(
        std::make_shared<const Node>(Node{LassoKind::Sum, RatExpr::zero(), {std::move(left), std::move(right)}}));
}

LassoExpr::LassoExpr() : LassoExpr(zero()) {}

LassoKind LassoExpr::kind() const noexcept { return node_->kind; }
const RatExpr& LassoExpr::rat() const noexcept { return node_->rat; }
const LassoExpr& LassoExpr::rest() const noexcept { return node_->kids.front(); }
const LassoExpr& LassoExpr::left() const noexcept { return node_->kids.front(); }
const LassoExpr& LassoExpr::right() const noexcept { return node_->kids.back(); }

bool operator==(const LassoExpr& a, const LassoExpr& b) {
    if (a.node_ == b.node_) return true;
    return a.kind() == b.kind() && a.rat() == b.rat() && a.node_->kids == b.node_->kids;
}

namespace {

std::string rat_factor(const RatExpr& t) {
    return t.kind() == RatKind::Sum ? "(" + t.to_string() + ")" : t.to_string();
}

std::string rat_operand(const RatExpr& t) {
    bool compound = t.kind() == RatKind::Sum || t.kind() == RatKind::Concat;
    return compound ? "(" + t.to_string() + ")" : t.to_string();
}

}  // namespace

std::string LassoExpr::to_string() const {
    switch (kind()) {
        case LassoKind::Zero: return "0";
        case LassoKind::Circle: return rat_operand(rat()) + "@";
        case LassoKind::Prefix: {
            // A nested prefix needs parentheses, otherwise the two rational
            // parts would be read back as one concatenation.
            bool wrap = rest().kind() == LassoKind::Sum || rest().kind() == LassoKind::Prefix;
            std::string body = rest().to_string();
            return rat_factor(rat()) + (wrap ? "(" + body + ")" : body);
        }
        case LassoKind::Sum: {
            std::string r = right().to_string();
            if (right().kind() == LassoKind::Sum) r = "(" + r + ")";
            return left().to_string() + "+" + r;
        }
    }
    return "0";
}

DisjunctiveForm::DisjunctiveForm(std::vector<LassoPair> pairs) {
    for (auto& p : pairs) {
        RatExpr spoke = normalize_b(p.spoke);
        if (spoke.is_zero() || normalize_b(p.loop).is_zero()) continue;
        if (p.loop.ewp()) throw SideConditionError("loop accepts the empty word: " + p.loop.to_string());
        pairs_.push_back({std::move(spoke), std::move(p.loop)});
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

LassoExpr DisjunctiveForm::to_expr() const {
    if (pairs_.empty()) return LassoExpr::zero();
    auto term = [](const LassoPair& p) { return LassoExpr::prefix(p.spoke, LassoExpr::circle(p.loop)); };
    LassoExpr acc = term(pairs_.front());
    for (std::size_t i = 1; i < pairs_.size(); ++i) acc = LassoExpr::sum(acc, term(pairs_[i]));
    return acc;
}

std::string DisjunctiveForm::to_string() const {
    if (pairs_.empty()) return "0";
    std::string out;
    for (const auto& p : pairs_) {
        if (!out.empty()) out += " + ";
        out += rat_factor(p.spoke) + ".(" + p.loop.to_string() + ")@";
    }
    return out;
}

DisjunctiveForm operator+(const DisjunctiveForm& a, const DisjunctiveForm& b) {
    std::vector<LassoPair> all = a.pairs_;
    all.insert(all.end(), b.pairs_.begin(), b.pairs_.end());
    return DisjunctiveForm(std::move(all));
}

std::string letters_of(const LassoExpr& rho) {
    std::string out;
    auto add = [&out](const std::string& s) {
        for (char c : s)
            if (out.find(c) == std::string::npos) out.push_back(c);
    };
    switch (rho.kind()) {
        case LassoKind::Zero: break;
        case LassoKind::Circle: add(letters_of(rho.rat())); break;
        case LassoKind::Prefix:
            add(letters_of(rho.rat()));
            add(letters_of(rho.rest()));
            break;
        case LassoKind::Sum:
            add(letters_of(rho.left()));
            add(letters_of(rho.right()));
            break;
    }
    return out;
}

namespace {

bool member_suffix(const LassoExpr& rho, std::string_view spoke, const Word& loop) {
    switch (rho.kind()) {
        case LassoKind::Zero: return false;
        case LassoKind::Circle: return spoke.empty() && member_naive(rho.rat(), loop);
        case LassoKind::Prefix:
            for (std::size_t m = 0; m <= spoke.size(); ++m)
                if (member_naive(rho.rat(), spoke.substr(0, m)) && member_suffix(rho.rest(), spoke.substr(m), loop))
                    return true;
            return false;
        case LassoKind::Sum:
            return member_suffix(rho.left(), spoke, loop) || member_suffix(rho.right(), spoke, loop);
    }
    return false;
}

}  // namespace

bool member_lasso_naive(const LassoExpr& rho, const Lasso& l) { return member_suffix(rho, l.spoke(), l.loop()); }

bool member_lasso_naive(const DisjunctiveForm& df, const Lasso& l) {
    return std::any_of(df.pairs().begin(), df.pairs().end(), [&l](const LassoPair& p) {
        return member_naive(p.spoke, l.spoke()) && member_naive(p.loop, l.loop());
    });
}

DisjunctiveForm disjunctive_form(const LassoExpr& rho) {
    switch (rho.kind()) {
        case LassoKind::Zero: return {};
        case LassoKind::Circle: return DisjunctiveForm({{RatExpr::one(), rho.rat()}});
        case LassoKind::Prefix: {
            // r.(sum t_i.r_i@) = sum (r.t_i).r_i@
            const DisjunctiveForm inner = disjunctive_form(rho.rest());
            std::vector<LassoPair> out;
            for (const auto& p : inner.pairs())
                out.push_back({RatExpr::concat(rho.rat(), p.spoke), p.loop});
            return DisjunctiveForm(std::move(out));
        }
        case LassoKind::Sum: return disjunctive_form(rho.left()) + disjunctive_form(rho.right());
    }
    return {};
}

LassoExpr d1_general(const LassoExpr& rho, char a) {
    switch (rho.kind()) {
        case LassoKind::Zero:
        case LassoKind::Circle: return LassoExpr::zero();
        case LassoKind::Prefix: {
            LassoExpr head = LassoExpr::prefix(deriv(rho.rat(), a), rho.rest());
            if (!rho.rat().ewp()) return head;
            return LassoExpr::sum(head, d1_general(rho.rest(), a));
        }
        case LassoKind::Sum: return LassoExpr::sum(d1_general(rho.left(), a), d1_general(rho.right(), a));
    }
    return LassoExpr::zero();
}

RatExpr d2_general(const LassoExpr& rho, char a) {
    switch (rho.kind()) {
        case LassoKind::Zero: return RatExpr::zero();
        case LassoKind::Circle: return deriv(rho.rat(), a);
        case LassoKind::Prefix: return rho.rat().ewp() ? d2_general(rho.rest(), a) : RatExpr::zero();
        case LassoKind::Sum:
            return normalize_b(RatExpr::sum(d2_general(rho.left(), a), d2_general(rho.right(), a)));
    }
    return RatExpr::zero();
}

DisjunctiveForm d1_df(const DisjunctiveForm& df, char a) {
    std::vector<LassoPair> out;
    out.reserve(df.size());
    for (const auto& p : df.pairs()) out.push_back({deriv(p.spoke, a), p.loop});
    return DisjunctiveForm(std::move(out));
}

RatExpr d2_df(const DisjunctiveForm& df, char a) {
    std::vector<RatExpr> parts;
    for (const auto& p : df.pairs())
        if (p.spoke.ewp()) parts.push_back(deriv(p.loop, a));
    if (parts.empty()) return RatExpr::zero();
    if (parts.size() == 1) return parts.front();
    return normalize_b(RatExpr::sum(std::move(parts)));
}

LassoAutomaton compile_lasso(const DisjunctiveForm& df, const Alphabet& sigma) {
    const std::size_t k = sigma.size();
    std::vector<DisjunctiveForm> spokes{df};
    std::map<DisjunctiveForm, State> spoke_index{{df, 0}};
    std::vector<State> d1;

    std::vector<RatExpr> loops;
    std::unordered_map<RatExpr, State, RatExprHash> loop_index;
    auto intern_loop = [&](const RatExpr& r) {
        auto [it, inserted] = loop_index.emplace(r, static_cast<State>(loops.size()));
        if (inserted) {
            if (loops.size() >= kStateCap) throw StateCapError("compile_lasso: loop state cap exceeded");
            loops.push_back(r);
        }
        return it->second;
    };
    std::vector<State> d2;

    for (std::size_t x = 0; x < spokes.size(); ++x) {
        for (char a : sigma) {
            DisjunctiveForm next = d1_df(spokes[x], a);
            auto [it, inserted] = spoke_index.emplace(next, static_cast<State>(spokes.size()));
            if (inserted) {
                if (spokes.size() >= kStateCap) throw StateCapError("compile_lasso: spoke state cap exceeded");
                spokes.push_back(std::move(next));
            }
            d1.push_back(it->second);
            d2.push_back(intern_loop(d2_df(spokes[x], a)));
        }
    }
    std::vector<State> d3;
    for (std::size_t y = 0; y < loops.size(); ++y)
        for (char a : sigma) d3.push_back(intern_loop(deriv(loops[y], a)));

    LassoAutomaton A(sigma, spokes.size(), loops.size(), 0);
    for (State x = 0; x < spokes.size(); ++x) {
        A.spoke_names[x] = "x" + std::to_string(x);
        for (std::size_t a = 0; a < k; ++a) {
            A.set_spoke_next(x, a, d1[x * k + a]);
            A.set_switch_next(x, a, d2[x * k + a]);
        }
    }
    for (State y = 0; y < loops.size(); ++y) {
        A.loop_names[y] = "y" + std::to_string(y);
        A.set_final(y, loops[y].ewp());
        for (std::size_t a = 0; a < k; ++a) A.set_loop_next(y, a, d3[y * k + a]);
    }
    return A;
}

LassoAutomaton compile_lasso(const LassoExpr& rho, const Alphabet& sigma) {
    return compile_lasso(disjunctive_form(rho), sigma);
}

}  // namespace lassokit
