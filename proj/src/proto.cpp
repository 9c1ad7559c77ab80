#include "qheis/proto.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace qheis {

using RF = RationalFunction;

PMonomial::PMonomial(long h_, long k_, long l_, Letter letter_) : h(h_), k(k_), l(l_), letter(letter_) {
    if (h < 0 || k < 0 || l < 0) throw std::invalid_argument("PMonomial exponents must be nonnegative");
    if ((letter == Letter::None) != (l == 0))
        throw std::invalid_argument("PMonomial: letter is None exactly when l == 0");
    if (k >= 1 && h > 1) throw std::invalid_argument("PMonomial: k >= 1 requires h in {0, 1}");
}

std::string PMonomial::to_string() const {
    if (is_one()) return "1";
    std::string out;
    auto factor = [&out](const char* sym, long e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += sym;
        if (e > 1) out += "^" + std::to_string(e);
    };
    factor("K", h);
    factor("C", k);
    factor(letter == Letter::A ? "A" : "B", l);
    return out;
}

bool operator<(const PMonomial& x, const PMonomial& y) {
    const long gx = x.grade(), gy = y.grade();
    if (gx != gy) return gx > gy;
    if (x.k != y.k) return x.k < y.k;
    return x.h < y.h;
}

PElement p_monomial(long h, long k, long l, Letter letter) { return PElement(PMonomial(h, k, l, letter)); }
PElement p_gen_k() { return p_monomial(1, 0, 0, Letter::None); }
PElement p_gen_a() { return p_monomial(0, 0, 1, Letter::A); }
PElement p_gen_b() { return p_monomial(0, 0, 1, Letter::B); }
PElement p_gen_c() { return p_monomial(0, 1, 0, Letter::None); }

PElement p_mul(const PMonomial& x, const PMonomial& y) {
    // Move K^(y.h) left across X^(x.l): A^l K^h = p^(-hl) K^h A^l, B^l K^h = p^(hl) K^h B^l.
    long p_exp = 0;
    if (x.letter == Letter::A) p_exp = -y.h * x.l;
    else if (x.letter == Letter::B) p_exp = y.h * x.l;
    const RF sign = RF::p_pow(p_exp);
    const long h = x.h + y.h;
    PElement out;
    for (const auto& [m, c] : h_mul(x.core(), y.core())) {
        // K^2 C = 1 with CK = KC.
        const long r = std::min(h / 2, m.k);
        out.add(PMonomial(h - 2 * r, m.k - r, m.l, m.letter), sign * c);
    }
    return out;
}

PElement p_mul(const PElement& x, const PElement& y) {
    PElement out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            const RF c = cx * cy;
            for (const auto& [mz, cz] : p_mul(mx, my)) out.add(mz, c * cz);
        }
    return out;
}

PElement p_commutator(const PElement& x, const PElement& y) { return p_mul(x, y) - p_mul(y, x); }

PElement p_pow(const PElement& x, long e) {
    if (e < 0) throw MathError("negative powers do not exist in P");
    PElement r = PElement::scalar(RF(1));
    for (long i = 0; i < e; ++i) r = p_mul(r, x);
    return r;
}

namespace {

struct Redex {
    std::size_t pos;
    std::size_t len;
};

std::optional<std::size_t> pair_rule(char a, char b) {
    static constexpr const char* pairs[] = {"AB", "BA", "AC", "BC", "AK", "BK", "CK"};
    for (std::size_t i = 0; i < 7; ++i)
        if (pairs[i][0] == a && pairs[i][1] == b) return i;
    return std::nullopt;
}

std::optional<Redex> redex_at(const std::string& w, std::size_t i) {
    if (i + 2 < w.size() && w.compare(i, 3, "KKC") == 0) return Redex{i, 3};
    if (i + 1 < w.size() && pair_rule(w[i], w[i + 1])) return Redex{i, 2};
    return std::nullopt;
}

std::optional<Redex> find_redex(const std::string& w, RewriteStrategy s) {
    if (s == RewriteStrategy::Leftmost) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (auto r = redex_at(w, i)) return r;
    } else {
        for (std::size_t i = w.size(); i-- > 0;)
            if (auto r = redex_at(w, i)) return r;
    }
    return std::nullopt;
}

// Right-hand side of the rule at a redex, as (replacement, coefficient) pairs.
std::vector<std::pair<std::string, RF>> rewrite(const std::string& lhs) {
    static const RF one(1);
    static const RF inv1mq = (one - RF::q()).inverse();
    if (lhs == "KKC") return {{"", one}};
    if (lhs == "AB") return {{"", inv1mq}, {"C", -RF::q() * inv1mq}};
    if (lhs == "BA") return {{"", inv1mq}, {"C", -inv1mq}};
    if (lhs == "AC") return {{"CA", RF::q()}};
    if (lhs == "BC") return {{"CB", RF::q_pow(-1)}};
    if (lhs == "AK") return {{"KA", RF::p_pow(-1)}};
    if (lhs == "BK") return {{"KB", RF::p()}};
    if (lhs == "CK") return {{"KC", one}};
    throw std::logic_error("no rule for " + lhs);
}

PMonomial monomial_of_normal_word(const std::string& w) {
    std::size_t i = 0;
    long h = 0, k = 0, l = 0;
    while (i < w.size() && w[i] == 'K') ++h, ++i;
    while (i < w.size() && w[i] == 'C') ++k, ++i;
    Letter letter = Letter::None;
    if (i < w.size()) {
        letter = w[i] == 'A' ? Letter::A : Letter::B;
        const char c = w[i];
        while (i < w.size() && w[i] == c) ++l, ++i;
    }
    if (i != w.size()) throw std::logic_error("irreducible word not in normal form: " + w);
    return PMonomial(h, k, l, letter);
}

void check_letters(const std::string& w) {
    for (char c : w)
        if (c != 'K' && c != 'A' && c != 'B' && c != 'C')
            throw std::invalid_argument(std::string("unknown generator letter '") + c + "'");
}

} // namespace

PElement normalize_word(const GeneratorWord& w, RewriteStrategy strategy) {
    check_letters(w.letters);
    std::map<std::string, RF> pending;
    if (!w.scalar.is_zero()) pending.emplace(w.letters, w.scalar);
    PElement out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::string& word = node.key();
        const RF& coeff = node.mapped();
        const auto r = find_redex(word, strategy);
        if (!r) {
            out.add(monomial_of_normal_word(word), coeff);
            continue;
        }
        const std::string head = word.substr(0, r->pos);
        const std::string tail = word.substr(r->pos + r->len);
        for (const auto& [rep, c] : rewrite(word.substr(r->pos, r->len))) {
            const RF v = coeff * c;
            auto [it, inserted] = pending.try_emplace(head + rep + tail, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return out;
}

PElement word_product(const GeneratorWord& w) {
    check_letters(w.letters);
    PElement acc = PElement::scalar(w.scalar);
    for (char c : w.letters) {
        switch (c) {
        case 'K': acc = p_mul(acc, p_gen_k()); break;
        case 'A': acc = p_mul(acc, p_gen_a()); break;
        case 'B': acc = p_mul(acc, p_gen_b()); break;
        default: acc = p_mul(acc, p_gen_c()); break;
        }
    }
    return acc;
}

PElement embed_h(const HElement& x) {
    PElement out;
    for (const auto& [m, c] : x) out.add(PMonomial::from_h(m), c);
    return out;
}

bool is_in_h(const PElement& x) {
    for (const auto& [m, c] : x)
        if (m.h != 0) return false;
    return true;
}

HElement restrict_to_h(const PElement& x) {
    HElement out;
    for (const auto& [m, c] : x) {
        if (m.h != 0) throw std::invalid_argument("element has K-terms; not in H(q)");
        out.add(m.core(), c);
    }
    return out;
}

LieSplit is_lie_polynomial(const PElement& x) {
    LieSplit out;
    out.constant_term = x.coeff(PMonomial{});
    for (const auto& [m, c] : x)
        if (!m.is_one()) out.remainder.add(m, c);
    out.lie = out.constant_term.is_zero();
    return out;
}

bool h_lie_membership(const HElement& x) { return gamma_lie_split(x).gamma.is_zero(); }

} // namespace qheis
