#include "lassokit/ratexp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace lassokit {

struct RatExpr::Node {
    RatKind kind;
    char symbol;
    bool ewp;
    bool normal;
    std::size_t hash;
    std::size_t size;
    std::vector<RatExpr> kids;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

RatExpr RatExpr::make(RatKind kind, char symbol, std::vector<RatExpr> kids, bool normal) {
    bool e = false;
    std::size_t h = mix(static_cast<std::size_t>(kind) * 131 + 7, static_cast<unsigned char>(symbol));
    std::size_t n = 1;
    for (const auto& k : kids) {
        h = mix(h, k.hash());
        n += k.size();
    }
    switch (kind) {
        case RatKind::Zero: e = false; break;
        case RatKind::One: e = true; break;
        case RatKind::Letter: e = false; break;
        case RatKind::Concat: e = kids[0].ewp() && kids[1].ewp(); break;
        case RatKind::Sum:
            e = std::any_of(kids.begin(), kids.end(), [](const RatExpr& k) { return k.ewp(); });
            break;
        case RatKind::Star: e = true; break;
    }
    return RatExpr(std::make_shared<const Node>(Node{kind, symbol, e, normal, h, n, std::move(kids)}));
}

RatExpr RatExpr::zero() {
    static const RatExpr z = make(RatKind::Zero, 0, {}, true);
    return z;
}

RatExpr RatExpr::one() {
    static const RatExpr o = make(RatKind::One, 0, {}, true);
    return o;
}

RatExpr RatExpr::letter(char symbol) { return make(RatKind::Letter, symbol, {}, true); }

RatExpr RatExpr::concat(RatExpr left, RatExpr right) {
    return make(RatKind::Concat, 0, {std::move(left), std::move(right)}, false);
}

RatExpr RatExpr::sum(RatExpr left, RatExpr right) {
    return make(RatKind::Sum, 0, {std::move(left), std::move(right)}, false);
}

RatExpr RatExpr::sum(std::vector<RatExpr> summands) {
    if (summands.size() < 2) throw std::invalid_argument("sum needs at least two summands");
    return make(RatKind::Sum, 0, std::move(summands), false);
}

RatExpr RatExpr::star(RatExpr operand) { return make(RatKind::Star, 0, {std::move(operand)}, false); }

RatExpr::RatExpr() : RatExpr(zero()) {}

RatKind RatExpr::kind() const noexcept { return node_->kind; }
char RatExpr::symbol() const noexcept { return node_->symbol; }
const std::vector<RatExpr>& RatExpr::children() const noexcept { return node_->kids; }
bool RatExpr::ewp() const noexcept { return node_->ewp; }
std::size_t RatExpr::hash() const noexcept { return node_->hash; }
std::size_t RatExpr::size() const noexcept { return node_->size; }
bool RatExpr::is_normal() const noexcept { return node_->normal; }

bool operator==(const RatExpr& a, const RatExpr& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.symbol() != b.symbol() || a.size() != b.size())
        return false;
    return a.children() == b.children();
}

std::strong_ordering operator<=>(const RatExpr& a, const RatExpr& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
    const auto& ka = a.children();
    const auto& kb = b.children();
    for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i)
        if (auto c = ka[i] <=> kb[i]; c != 0) return c;
    return ka.size() <=> kb.size();
}

namespace {

void print(const RatExpr& t, std::string& out) {
    auto wrapped = [&out](const RatExpr& k, bool parens) {
        if (parens) out.push_back('(');
        print(k, out);
        if (parens) out.push_back(')');
    };
    switch (t.kind()) {
        case RatKind::Zero: out.push_back('0'); break;
        case RatKind::One: out.push_back('1'); break;
        case RatKind::Letter: out.push_back(t.symbol()); break;
        case RatKind::Concat:
            wrapped(t.left(), t.left().kind() == RatKind::Concat || t.left().kind() == RatKind::Sum);
            wrapped(t.right(), t.right().kind() == RatKind::Sum);
            break;
        case RatKind::Sum: {
            bool first = true;
            for (const auto& k : t.children()) {
                if (!first) out.push_back('+');
                first = false;
                wrapped(k, k.kind() == RatKind::Sum);
            }
            break;
        }
        case RatKind::Star:
            wrapped(t.operand(), t.operand().kind() == RatKind::Concat || t.operand().kind() == RatKind::Sum);
            out.push_back('*');
            break;
    }
}

}  // namespace

std::string RatExpr::to_string() const {
    std::string out;
    print(*this, out);
    return out;
}

RatExpr normalize_b(const RatExpr& t) {
    if (t.is_normal()) return t;
    switch (t.kind()) {
        case RatKind::Zero: return RatExpr::zero();
        case RatKind::One: return RatExpr::one();
        case RatKind::Letter: return RatExpr::letter(t.symbol());
        case RatKind::Concat: {
            RatExpr l = normalize_b(t.left());
            RatExpr r = normalize_b(t.right());
            if (l.is_zero() || r.is_zero()) return RatExpr::zero();
            if (l.is_one()) return r;
            if (r.is_one()) return l;
            return RatExpr::make(RatKind::Concat, 0, {std::move(l), std::move(r)}, true);
        }
        case RatKind::Sum: {
            std::vector<RatExpr> flat;
            for (const auto& k : t.children()) {
                RatExpr n = normalize_b(k);
                if (n.kind() == RatKind::Sum) {
                    flat.insert(flat.end(), n.children().begin(), n.children().end());
                } else if (!n.is_zero()) {
                    flat.push_back(std::move(n));
                }
            }
            std::sort(flat.begin(), flat.end());
            flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
            if (flat.empty()) return RatExpr::zero();
            if (flat.size() == 1) return flat.front();
            return RatExpr::make(RatKind::Sum, 0, std::move(flat), true);
        }
        case RatKind::Star:
            return RatExpr::make(RatKind::Star, 0, {normalize_b(t.operand())}, true);
    }
    return t;
}

namespace {

RatExpr deriv_raw(const RatExpr& t, char a) {
    switch (t.kind()) {
        case RatKind::Zero:
        case RatKind::One: return RatExpr::zero();
        case RatKind::Letter: return t.symbol() == a ? RatExpr::one() : RatExpr::zero();
        case RatKind::Sum: {
            std::vector<RatExpr> parts;
            parts.reserve(t.children().size());
            for (const auto& k : t.children()) parts.push_back(deriv_raw(k, a));
            return RatExpr::sum(std::move(parts));
        }
        case RatKind::Concat: {
            // d(t.r) = d(t).r + [t in N].d(r); the bracket is the constant 1 or 0.
            RatExpr head = RatExpr::concat(deriv_raw(t.left(), a), t.right());
            RatExpr bracket = t.left().ewp() ? RatExpr::one() : RatExpr::zero();
            RatExpr tail = t.left().ewp() ? deriv_raw(t.right(), a) : RatExpr::zero();
            return RatExpr::sum(std::move(head), RatExpr::concat(std::move(bracket), std::move(tail)));
        }
        case RatKind::Star: return RatExpr::concat(deriv_raw(t.operand(), a), t);
    }
    return RatExpr::zero();
}

}  // namespace

RatExpr deriv(const RatExpr& t, char a) { return normalize_b(deriv_raw(t, a)); }

RatExpr word_deriv(const RatExpr& t, std::string_view u) {
    RatExpr cur = t;
    for (char a : u) cur = deriv(cur, a);
    return cur;
}

namespace {

class NaiveMatcher {
public:
    explicit NaiveMatcher(std::string_view word) : word_(word) {}

    bool match(const RatExpr& t, std::size_t i, std::size_t j) {
        Key key{t.identity(), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = compute(t, i, j);
        memo_.emplace(key, result);
        return result;
    }

private:
    struct Key {
        const void* node;
        std::uint32_t i, j;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<const void*>{}(k.node) ^ (std::size_t{k.i} << 20) ^ (std::size_t{k.j} << 40);
        }
    };

    bool compute(const RatExpr& t, std::size_t i, std::size_t j) {
        switch (t.kind()) {
            case RatKind::Zero: return false;
            case RatKind::One: return i == j;
            case RatKind::Letter: return j == i + 1 && word_[i] == t.symbol();
            case RatKind::Sum:
                for (const auto& k : t.children())
                    if (match(k, i, j)) return true;
                return false;
            case RatKind::Concat:
                for (std::size_t m = i; m <= j; ++m)
                    if (match(t.left(), i, m) && match(t.right(), m, j)) return true;
                return false;
            case RatKind::Star:
                if (i == j) return true;
                for (std::size_t m = i + 1; m <= j; ++m)
                    if (match(t.operand(), i, m) && match(t, m, j)) return true;
                return false;
        }
        return false;
    }

    std::string_view word_;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

using SplitSet = std::set<SplitPair>;

void add_pair(SplitSet& out, const RatExpr& l, const RatExpr& r) {
    out.insert(SplitPair{normalize_b(l), normalize_b(r)});
}

SplitSet split_rec(const RatExpr& t) {
    SplitSet out;
    switch (t.kind()) {
        case RatKind::Zero: break;
        case RatKind::One: add_pair(out, RatExpr::one(), RatExpr::one()); break;
        case RatKind::Letter:
            add_pair(out, RatExpr::one(), t);
            add_pair(out, t, RatExpr::one());
            break;
        case RatKind::Sum:
            for (const auto& k : t.children()) {
                SplitSet part = split_rec(k);
                out.insert(part.begin(), part.end());
            }
            break;
        case RatKind::Concat: {
            for (const auto& [t0, t1] : split_rec(t.left())) add_pair(out, t0, RatExpr::concat(t1, t.right()));
            for (const auto& [r0, r1] : split_rec(t.right())) add_pair(out, RatExpr::concat(t.left(), r0), r1);
            break;
        }
        case RatKind::Star: {
            const RatExpr& body = t.operand();
            for (const auto& [t0, t1] : split_rec(body))
                add_pair(out, RatExpr::concat(t, t0), RatExpr::concat(t1, t));
            add_pair(out, RatExpr::one(), RatExpr::one());
            add_pair(out, RatExpr::concat(t, body), RatExpr::one());
            break;
        }
    }
    return out;
}

void collect_letters(const RatExpr& t, std::string& out) {
    if (t.kind() == RatKind::Letter && out.find(t.symbol()) == std::string::npos) out.push_back(t.symbol());
    for (const auto& k : t.children()) collect_letters(k, out);
}

}  // namespace

bool member_naive(const RatExpr& t, std::string_view u) {
    NaiveMatcher m(u);
    return m.match(t, 0, u.size());
}

std::vector<SplitPair> split(const RatExpr& t) {
    SplitSet s = split_rec(t);
    return {s.begin(), s.end()};
}

std::vector<Word> enumerate_language(const RatExpr& t, const Alphabet& sigma, std::size_t max_len) {
    std::vector<Word> out;
    for (auto& w : all_words(sigma, max_len))
        if (member_naive(t, w)) out.push_back(std::move(w));
    return out;
}

std::string letters_of(const RatExpr& t) {
    std::string out;
    collect_letters(t, out);
    return out;
}

}  // namespace lassokit
