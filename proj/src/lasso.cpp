#include "lassokit/lasso.hpp"

#include <numeric>
#include <stdexcept>

namespace lassokit {

Lasso::Lasso(Word spoke, Word loop) : spoke_(std::move(spoke)), loop_(std::move(loop)) {
    if (loop_.empty()) throw std::invalid_argument("lasso loop must be nonempty");
}

Lasso Lasso::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos)
        throw std::invalid_argument("lasso literal must have the form spoke:loop, got '" + std::string(text) + "'");
    std::string spoke(text.substr(0, colon));
    std::string loop(text.substr(colon + 1));
    for (char c : spoke + loop)
        if (c < 'a' || c > 'z')
            throw std::invalid_argument("lasso literal contains non-letter '" + std::string(1, c) + "'");
    if (loop.empty()) throw std::invalid_argument("lasso loop must be nonempty in '" + std::string(text) + "'");
    return Lasso(std::move(spoke), std::move(loop));
}

Word primitive_root(std::string_view v) {
    const std::size_t n = v.size();
    if (n == 0) return {};
    std::vector<std::size_t> fail(n, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && v[i] != v[k]) k = fail[k - 1];
        if (v[i] == v[k]) ++k;
        fail[i] = k;
    }
    std::size_t period = n - fail[n - 1];
    return Word(v.substr(0, n % period == 0 ? period : n));
}

std::optional<Lasso> reduce_step(const Lasso& l) {
    const Word& u = l.spoke();
    const Word& v = l.loop();
    if (!u.empty() && u.back() == v.back()) {
        Word loop;
        loop.reserve(v.size());
        loop.push_back(v.back());
        loop.append(v, 0, v.size() - 1);
        return Lasso(u.substr(0, u.size() - 1), std::move(loop));
    }
    Word root = primitive_root(v);
    if (root.size() < v.size()) return Lasso(u, std::move(root));
    return std::nullopt;
}

Lasso normal_form(const Lasso& l) {
    Lasso cur = l;
    while (auto next = reduce_step(cur)) cur = std::move(*next);
    return cur;
}

bool gamma_equiv(const Lasso& a, const Lasso& b) { return normal_form(a) == normal_form(b); }

bool up_equal(const Lasso& a, const Lasso& b) {
    const std::size_t len = std::max(a.spoke().size(), b.spoke().size()) + std::lcm(a.loop().size(), b.loop().size());
    auto at = [](const Lasso& l, std::size_t i) {
        if (i < l.spoke().size()) return l.spoke()[i];
        return l.loop()[(i - l.spoke().size()) % l.loop().size()];
    };
    for (std::size_t i = 0; i < len; ++i)
        if (at(a, i) != at(b, i)) return false;
    return true;
}

std::vector<Lasso> expansions(const Lasso& l, std::size_t k_max) {
    std::vector<Lasso> out;
    const Word& v = l.loop();
    out.emplace_back(l.spoke() + v.front(), v.substr(1) + v.front());
    Word power = v;
    for (std::size_t k = 2; k <= k_max; ++k) {
        power += v;
        out.emplace_back(l.spoke(), power);
    }
    return out;
}

std::vector<Lasso> enumerate_lassos(const Alphabet& sigma, std::size_t max_spoke, std::size_t max_loop) {
    if (max_loop < 1) throw std::invalid_argument("max_loop must be at least 1");
    std::vector<Word> spokes = all_words(sigma, max_spoke);
    std::vector<Word> loops = all_words(sigma, max_loop);
    std::vector<Lasso> out;
    out.reserve(spokes.size() * (loops.size() - 1));
    for (const auto& u : spokes)
        for (std::size_t i = 1; i < loops.size(); ++i) out.emplace_back(u, loops[i]);
    return out;
}

std::vector<Lasso> equivalent_lassos(const Lasso& l, std::size_t max_spoke, std::size_t max_loop) {
    // Every representative of p.w^omega (normal form (p, w)) is
    // (p.x, rot(w)^k) with x a prefix of w^omega.
    Lasso nf = normal_form(l);
    const Word& p = nf.spoke();
    const Word& w = nf.loop();
    std::vector<Lasso> out;
    if (p.size() > max_spoke) return out;
    for (std::size_t m = 0; p.size() + m <= max_spoke; ++m) {
        Word u = p;
        for (std::size_t i = 0; i < m; ++i) u.push_back(w[i % w.size()]);
        std::size_t shift = m % w.size();
        Word rot = w.substr(shift) + w.substr(0, shift);
        Word v = rot;
        while (v.size() <= max_loop) {
            out.emplace_back(u, v);
            v += rot;
        }
    }
    return out;
}

}  // namespace lassokit
