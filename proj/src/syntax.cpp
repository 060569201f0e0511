// One recursive-descent parser for all three expression sorts. Text is first
// read into a sort-free tree; the requested sort is then assigned top-down.
// In a juxtaposition every factor but the last must be rational, and the
// whole sequence takes the sort of its last factor.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lassokit/errors.hpp"
#include "lassokit/lassoexp.hpp"
#include "lassokit/omega.hpp"
#include "lassokit/ratexp.hpp"

namespace lassokit {

namespace {

enum class Tag { Zero, One, Letter, Seq, Sum, Star, Circle, Power };

struct Syn {
    Tag tag;
    std::size_t pos;
    char symbol = 0;
    std::vector<std::unique_ptr<Syn>> kids;
};

using SynPtr = std::unique_ptr<Syn>;

SynPtr node(Tag tag, std::size_t pos, char symbol = 0) {
    auto s = std::make_unique<Syn>();
    s->tag = tag;
    s->pos = pos;
    s->symbol = symbol;
    return s;
}

class Reader {
public:
    Reader(std::string_view text, const Alphabet& sigma) : text_(text), sigma_(sigma) {}

    SynPtr parse() {
        SynPtr s = sum();
        skip();
        if (i_ < text_.size()) fail(std::string("unexpected '") + text_[i_] + "'");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    char peek() {
        skip();
        return i_ < text_.size() ? text_[i_] : '\0';
    }

    static bool starts_primary(char c) { return c == '0' || c == '1' || c == '(' || (c >= 'a' && c <= 'z'); }

    SynPtr sum() {
        SynPtr first = seq();
        if (peek() != '+') return first;
        SynPtr s = node(Tag::Sum, first->pos);
        s->kids.push_back(std::move(first));
        while (peek() == '+') {
            ++i_;
            s->kids.push_back(seq());
        }
        return s;
    }

    SynPtr seq() {
        std::size_t start = (skip(), i_);
        std::vector<SynPtr> factors;
        factors.push_back(postfix());
        while (true) {
            char c = peek();
            if (c == '.') {
                ++i_;
                if (!starts_primary(peek())) fail("expected an operand after '.'");
                factors.push_back(postfix());
            } else if (starts_primary(c)) {
                factors.push_back(postfix());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return std::move(factors.front());
        SynPtr s = node(Tag::Seq, start);
        s->kids = std::move(factors);
        return s;
    }

    SynPtr postfix() {
        SynPtr p = primary();
        while (true) {
            char c = peek();
            Tag t;
            if (c == '*') t = Tag::Star;
            else if (c == '@') t = Tag::Circle;
            else if (c == '$') t = Tag::Power;
            else break;
            SynPtr wrapped = node(t, i_);
            ++i_;
            wrapped->kids.push_back(std::move(p));
            p = std::move(wrapped);
        }
        return p;
    }

    SynPtr primary() {
        char c = peek();
        std::size_t at = i_;
        if (c == '\0') fail("unexpected end of input");
        if (c == '0') return ++i_, node(Tag::Zero, at);
        if (c == '1') return ++i_, node(Tag::One, at);
        if (c >= 'a' && c <= 'z') {
            if (!sigma_.contains(c)) fail(std::string("letter '") + c + "' is not in the alphabet");
            ++i_;
            return node(Tag::Letter, at, c);
        }
        if (c == '(') {
            ++i_;
            SynPtr inner = sum();
            if (peek() != ')') fail("expected ')'");
            ++i_;
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const Alphabet& sigma_;
    std::size_t i_ = 0;
};

RatExpr to_rat(const Syn& s);

RatExpr concat_right(const std::vector<SynPtr>& factors, std::size_t from, std::size_t to) {
    RatExpr acc = to_rat(*factors[to - 1]);
    for (std::size_t i = to - 1; i-- > from;) acc = RatExpr::concat(to_rat(*factors[i]), acc);
    return acc;
}

RatExpr to_rat(const Syn& s) {
    switch (s.tag) {
        case Tag::Zero: return RatExpr::zero();
        case Tag::One: return RatExpr::one();
        case Tag::Letter: return RatExpr::letter(s.symbol);
        case Tag::Seq: return concat_right(s.kids, 0, s.kids.size());
        case Tag::Sum: {
            std::vector<RatExpr> parts;
            for (const auto& k : s.kids) parts.push_back(to_rat(*k));
            return RatExpr::sum(std::move(parts));
        }
        case Tag::Star: return RatExpr::star(to_rat(*s.kids[0]));
        case Tag::Circle: throw ParseError("'@' is not allowed in a rational expression", s.pos);
        case Tag::Power: throw ParseError("'$' is not allowed in a rational expression", s.pos);
    }
    throw ParseError("bad expression", s.pos);
}

LassoExpr to_lasso(const Syn& s) {
    switch (s.tag) {
        case Tag::Zero: return LassoExpr::zero();
        case Tag::Circle: {
            RatExpr r = to_rat(*s.kids[0]);
            if (r.ewp())
                throw SideConditionError("operand of '@' at position " + std::to_string(s.pos) +
                                         " accepts the empty word: " + r.to_string());
            return LassoExpr::circle(r);
        }
        case Tag::Seq: {
            const std::size_t n = s.kids.size();
            return LassoExpr::prefix(concat_right(s.kids, 0, n - 1), to_lasso(*s.kids[n - 1]));
        }
        case Tag::Sum: {
            LassoExpr acc = to_lasso(*s.kids[0]);
            for (std::size_t i = 1; i < s.kids.size(); ++i) acc = LassoExpr::sum(acc, to_lasso(*s.kids[i]));
            return acc;
        }
        case Tag::Power: throw ParseError("'$' is not allowed in a lasso expression", s.pos);
        default: throw ParseError("expected a lasso expression (missing '@'?)", s.pos);
    }
}

OmegaExpr to_omega(const Syn& s) {
    switch (s.tag) {
        case Tag::Zero: return OmegaExpr::zero();
        case Tag::Power: {
            RatExpr r = to_rat(*s.kids[0]);
            if (r.ewp())
                throw SideConditionError("operand of '$' at position " + std::to_string(s.pos) +
                                         " accepts the empty word: " + r.to_string());
            return OmegaExpr::power(r);
        }
        case Tag::Seq: {
            const std::size_t n = s.kids.size();
            return OmegaExpr::prefix(concat_right(s.kids, 0, n - 1), to_omega(*s.kids[n - 1]));
        }
        case Tag::Sum: {
            OmegaExpr acc = to_omega(*s.kids[0]);
            for (std::size_t i = 1; i < s.kids.size(); ++i) acc = OmegaExpr::sum(acc, to_omega(*s.kids[i]));
            return acc;
        }
        case Tag::Circle: throw ParseError("'@' is not allowed in an omega-expression", s.pos);
        default: throw ParseError("expected an omega-expression (missing '$'?)", s.pos);
    }
}

}  // namespace

RatExpr parse_rexp(std::string_view text, const Alphabet& sigma) { return to_rat(*Reader(text, sigma).parse()); }

LassoExpr parse_lexp(std::string_view text, const Alphabet& sigma) {
    return to_lasso(*Reader(text, sigma).parse());
}

OmegaExpr parse_oexp(std::string_view text, const Alphabet& sigma) {
    return to_omega(*Reader(text, sigma).parse());
}

}  // namespace lassokit
