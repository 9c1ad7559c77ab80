#include "qheis/liewitness.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace qheis {

using RF = RationalFunction;

LieExpr lie_gen(GenSymbol s) { return std::make_shared<const LieNode>(LieNode{LieNode::Gen{s}}); }
LieExpr lie_bracket(LieExpr x, LieExpr y) {
    return std::make_shared<const LieNode>(LieNode{LieNode::Bracket{std::move(x), std::move(y)}});
}
LieExpr lie_scale(RationalFunction c, LieExpr x) {
    return std::make_shared<const LieNode>(LieNode{LieNode::Scale{std::move(c), std::move(x)}});
}
LieExpr lie_sum(std::vector<LieExpr> terms) {
    return std::make_shared<const LieNode>(LieNode{LieNode::Sum{std::move(terms)}});
}
LieExpr lie_adpow(LieExpr base, int sign, long power, LieExpr arg) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("AdPow sign must be +1 or -1");
    if (power < 0) throw std::invalid_argument("AdPow power must be nonnegative");
    return std::make_shared<const LieNode>(LieNode{LieNode::AdPow{std::move(base), sign, power, std::move(arg)}});
}

PElement gen_value(GenSymbol s) {
    switch (s) {
    case GenSymbol::K:
    case GenSymbol::K0: return p_gen_k();
    case GenSymbol::A: return p_gen_a();
    case GenSymbol::B: return p_gen_b();
    case GenSymbol::C: return p_gen_c();
    case GenSymbol::K1: return p_gen_a() + p_gen_b();
    case GenSymbol::K2: {
        const RF one(1), p = RF::p();
        return ((one - p) / p) * p_monomial(1, 0, 1, Letter::A) + ((one - p.pow(3)) / p) * p_monomial(1, 0, 1, Letter::B);
    }
    }
    throw std::logic_error("bad generator");
}

std::string gen_name(GenSymbol s) {
    static const char* names[] = {"K", "A", "B", "C", "K0", "K1", "K2"};
    return names[static_cast<int>(s)];
}

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

struct Evaluator {
    std::unordered_map<const LieNode*, PElement> cache;

    PElement operator()(const LieExpr& e) {
        if (auto it = cache.find(e.get()); it != cache.end()) return it->second;
        PElement v = std::visit(
            overloaded{
                [](const LieNode::Gen& g) { return gen_value(g.symbol); },
                [this](const LieNode::Bracket& b) { return p_commutator((*this)(b.left), (*this)(b.right)); },
                [this](const LieNode::Scale& s) { return s.c * (*this)(s.arg); },
                [this](const LieNode::Sum& s) {
                    PElement acc;
                    for (const auto& t : s.terms) acc += (*this)(t);
                    return acc;
                },
                [this](const LieNode::AdPow& a) {
                    const PElement x = (*this)(a.base);
                    PElement y = (*this)(a.arg);
                    for (long i = 0; i < a.power; ++i) {
                        y = p_commutator(x, y);
                        if (a.sign < 0) y = -y;
                    }
                    return y;
                }},
            e->node);
        cache.emplace(e.get(), v);
        return v;
    }
};

} // namespace

PElement eval_lie(const LieExpr& e) {
    Evaluator ev;
    return ev(e);
}

LieExpr expand_adpow(const LieExpr& e) {
    return std::visit(overloaded{[&](const LieNode::Gen&) { return e; },
                                 [](const LieNode::Bracket& b) {
                                     return lie_bracket(expand_adpow(b.left), expand_adpow(b.right));
                                 },
                                 [](const LieNode::Scale& s) { return lie_scale(s.c, expand_adpow(s.arg)); },
                                 [](const LieNode::Sum& s) {
                                     std::vector<LieExpr> t;
                                     for (const auto& x : s.terms) t.push_back(expand_adpow(x));
                                     return lie_sum(std::move(t));
                                 },
                                 [](const LieNode::AdPow& a) {
                                     const LieExpr base = expand_adpow(a.base);
                                     LieExpr y = expand_adpow(a.arg);
                                     for (long i = 0; i < a.power; ++i) y = lie_bracket(base, y);
                                     if (a.sign < 0 && a.power % 2 == 1) y = lie_scale(RF(-1), y);
                                     return y;
                                 }},
                      e->node);
}

namespace {

struct Substituter {
    const std::map<GenSymbol, LieExpr>& images;
    std::unordered_map<const LieNode*, LieExpr> cache;

    LieExpr operator()(const LieExpr& e) {
        if (auto it = cache.find(e.get()); it != cache.end()) return it->second;
        LieExpr out = std::visit(
            overloaded{[&](const LieNode::Gen& g) {
                           auto it = images.find(g.symbol);
                           return it == images.end() ? e : it->second;
                       },
                       [this](const LieNode::Bracket& b) { return lie_bracket((*this)(b.left), (*this)(b.right)); },
                       [this](const LieNode::Scale& s) { return lie_scale(s.c, (*this)(s.arg)); },
                       [this](const LieNode::Sum& s) {
                           std::vector<LieExpr> t;
                           for (const auto& x : s.terms) t.push_back((*this)(x));
                           return lie_sum(std::move(t));
                       },
                       [this](const LieNode::AdPow& a) {
                           return lie_adpow((*this)(a.base), a.sign, a.power, (*this)(a.arg));
                       }},
            e->node);
        cache.emplace(e.get(), out);
        return out;
    }
};

} // namespace

LieExpr lie_substitute(const LieExpr& e, const std::map<GenSymbol, LieExpr>& images) {
    Substituter s{images, {}};
    return s(e);
}

std::string lie_to_string(const LieExpr& e) {
    return std::visit(
        overloaded{[](const LieNode::Gen& g) { return gen_name(g.symbol); },
                   [](const LieNode::Bracket& b) {
                       return "[" + lie_to_string(b.left) + "," + lie_to_string(b.right) + "]";
                   },
                   [](const LieNode::Scale& s) { return "(" + s.c.to_string() + ")*" + lie_to_string(s.arg); },
                   [](const LieNode::Sum& s) {
                       if (s.terms.empty()) return std::string("0");
                       std::string out;
                       for (const auto& t : s.terms) out += (out.empty() ? "" : " + ") + lie_to_string(t);
                       return "(" + out + ")";
                   },
                   [](const LieNode::AdPow& a) {
                       std::string out = a.sign < 0 ? "(-ad " : "(ad ";
                       out += lie_to_string(a.base) + ")";
                       if (a.power != 1) out += "^" + std::to_string(a.power);
                       return out + "(" + lie_to_string(a.arg) + ")";
                   }},
        e->node);
}

bool lie_structurally_equal(const LieExpr& x, const LieExpr& y) {
    if (x == y) return true;
    if (!x || !y || x->node.index() != y->node.index()) return false;
    return std::visit(
        overloaded{[&](const LieNode::Gen& g) { return g.symbol == std::get<LieNode::Gen>(y->node).symbol; },
                   [&](const LieNode::Bracket& b) {
                       const auto& o = std::get<LieNode::Bracket>(y->node);
                       return lie_structurally_equal(b.left, o.left) && lie_structurally_equal(b.right, o.right);
                   },
                   [&](const LieNode::Scale& s) {
                       const auto& o = std::get<LieNode::Scale>(y->node);
                       return s.c == o.c && lie_structurally_equal(s.arg, o.arg);
                   },
                   [&](const LieNode::Sum& s) {
                       const auto& o = std::get<LieNode::Sum>(y->node);
                       if (s.terms.size() != o.terms.size()) return false;
                       for (std::size_t i = 0; i < s.terms.size(); ++i)
                           if (!lie_structurally_equal(s.terms[i], o.terms[i])) return false;
                       return true;
                   },
                   [&](const LieNode::AdPow& a) {
                       const auto& o = std::get<LieNode::AdPow>(y->node);
                       return a.sign == o.sign && a.power == o.power && lie_structurally_equal(a.base, o.base) &&
                              lie_structurally_equal(a.arg, o.arg);
                   }},
        x->node);
}

namespace {

const RF one(1);

RF pp(long e) { return RF::p_pow(e); }
RF qq(long e) { return RF::q_pow(e); }

LieExpr K() { return lie_gen(GenSymbol::K); }
LieExpr A() { return lie_gen(GenSymbol::A); }
LieExpr B() { return lie_gen(GenSymbol::B); }
LieExpr C_bracket() { return lie_bracket(A(), B()); }

struct Printed {
    LieExpr expr;
    std::string formula;
};

WitnessRecord witness_cached(const PMonomial& m);
LieExpr W(long h, long k, long l, Letter x) { return witness_cached(PMonomial(h, k, l, x)).expr; }

// The identity as printed for m, with recursive pieces taken from the verified witnesses.
Printed printed_form(const PMonomial& m) {
    const long h = m.h, k = m.k, l = m.l;
    const RF q = RF::q(), p = RF::p();
    if (h == 0 && l == 0 && k == 1) return {lie_gen(GenSymbol::C), "generator"};
    if (h == 1 && k == 0 && l == 0) return {K(), "generator"};
    if (h == 0 && k == 0 && l == 1) return {m.letter == Letter::A ? A() : B(), "generator"};
    if (h == 0 && l == 0) {
        // C^{j+2} = -q^j(1-q)/(1-q^{j+1}) sum_{i=0..j} ((ad B)(-ad C)^j(ad A))(C) / (q-1)^{1+i}
        const long j = k - 2;
        const LieExpr c = C_bracket();
        const LieExpr t = lie_adpow(B(), 1, 1, lie_adpow(c, -1, j, lie_adpow(A(), 1, 1, c)));
        std::vector<LieExpr> terms;
        for (long i = 0; i <= j; ++i) terms.push_back(lie_scale((q - one).pow(-1 - i), t));
        return {lie_scale(-qq(j) * (one - q) / (one - qq(j + 1)), lie_sum(std::move(terms))), "C^k"};
    }
    if (h == 0 && k >= 1 && m.letter == Letter::A) {
        // C^{j+1}A^l = -((-ad C)^j (-ad A)^{l+1})(B) / ((1-q)^l (q^l-1)^j)
        const long j = k - 1;
        const LieExpr e = lie_adpow(C_bracket(), -1, j, lie_adpow(A(), -1, l + 1, B()));
        return {lie_scale(-((one - q).pow(l) * (qq(l) - one).pow(j)).inverse(), e), "C^k A^l"};
    }
    if (h == 0 && k >= 1 && m.letter == Letter::B) {
        // C^{j+1}B^l = q^{l(j+1)} ((ad B)^{l-1}(ad C)^{j+1})(B) / ((q-1)^{j+1}(1-q^{j+1})^{l-1})
        const long j = k - 1;
        const LieExpr e = lie_adpow(B(), 1, l - 1, lie_adpow(C_bracket(), 1, j + 1, B()));
        return {lie_scale(qq(l * (j + 1)) / ((q - one).pow(j + 1) * (one - qq(j + 1)).pow(l - 1)), e), "C^k B^l"};
    }
    if (h == 1 && k >= 1 && m.letter == Letter::A)
        return {lie_scale(pp(l) / (one - pp(l)), lie_bracket(W(0, k, l, Letter::A), K())), "K C^k A^l"};
    if (h == 1 && k >= 1 && m.letter == Letter::B)
        return {lie_scale((one - pp(l)).inverse(), lie_bracket(K(), W(0, k, l, Letter::B))), "K C^k B^l"};
    if (h >= 1 && k == 0 && m.letter == Letter::A) {
        const LieExpr e = lie_adpow(K(), -1, h - 1, lie_adpow(A(), 1, l, K()));
        return {lie_scale(pp(h * l) / ((one - p).pow(l) * (one - pp(l)).pow(h - 1)), e), "K^h A^l"};
    }
    if (h >= 1 && k == 0 && m.letter == Letter::B) {
        const LieExpr e = lie_adpow(K(), 1, h - 1, lie_adpow(A(), -1, l, K()));
        return {lie_scale(((one - p).pow(l) * (one - pp(l)).pow(h - 1)).inverse(), e), "K^h B^l"};
    }
    if (h == 0 && k == 0 && m.letter == Letter::A) {
        const LieExpr br = lie_bracket(W(1, 0, l + 1, Letter::A), W(1, 0, 1, Letter::B));
        return {lie_sum({lie_scale((one - pp(2)) / (p * (one - pp(l))), br),
                         lie_scale(-(one - pp(l + 2)) / (pp(l + 2) * (one - pp(l))), W(2, 0, l, Letter::A))}),
                "A^l"};
    }
    if (h == 0 && k == 0 && m.letter == Letter::B) {
        const LieExpr br = lie_bracket(W(1, 0, 1, Letter::A), W(1, 0, l + 1, Letter::B));
        return {lie_sum({lie_scale((one - pp(2)) / (one - pp(l)) * pp(l - 1), br),
                         lie_scale(-(one - pp(l + 2)) / (one - pp(l)) * pp(l - 2), W(2, 0, l, Letter::B))}),
                "B^l"};
    }
    if (k == 0 && l == 0) {
        // K^{j+2} = (1-p^2)/(1-p^{j+2}) [K^{j+2}A, B] + (1-p^j)/(1-p^{j+2}) p^2 K^j
        const long j = h - 2;
        std::vector<LieExpr> terms{
            lie_scale((one - pp(2)) / (one - pp(j + 2)), lie_bracket(W(j + 2, 0, 1, Letter::A), B()))};
        if (j > 0) terms.push_back(lie_scale((one - pp(j)) / (one - pp(j + 2)) * pp(2), W(j, 0, 0, Letter::None)));
        return {lie_sum(std::move(terms)), "K^h"};
    }
    // K C^l = (1-p^2)/(1-p^{2l}) p^{2l-2} [K C^{l-1} A, B] + (1-p^{2l-2})/(1-p^{2l}) K C^{l-1}
    std::vector<LieExpr> terms{
        lie_scale((one - pp(2)) / (one - pp(2 * k)) * pp(2 * k - 2), lie_bracket(W(1, k - 1, 1, Letter::A), B()))};
    if (k > 1) terms.push_back(lie_scale((one - pp(2 * k - 2)) / (one - pp(2 * k)), W(1, k - 1, 0, Letter::None)));
    return {lie_sum(std::move(terms)), "K C^l"};
}

// Replacement identities for the printed forms that do not evaluate to the target.
LieExpr corrected_form(const PMonomial& m) {
    const long h = m.h, k = m.k, l = m.l;
    const RF q = RF::q(), p = RF::p();
    if (h == 0 && l == 0) {
        // T_j = ((ad B)(-ad C)^j(ad A))(C) = -(q-1)^j [(q^{-j-1}-1) C^{j+1} + (q-q^{-j-1}) C^{j+2}]
        const long j = k - 2;
        const LieExpr c = C_bracket();
        const LieExpr t = lie_adpow(B(), 1, 1, lie_adpow(c, -1, j, lie_adpow(A(), 1, 1, c)));
        const RF lower = (q - one).pow(j) * (qq(-j - 1) - one);
        const RF upper = (q - one).pow(j) * (q - qq(-j - 1));
        return lie_scale(-upper.inverse(), lie_sum({t, lie_scale(lower, W(0, j + 1, 0, Letter::None))}));
    }
    if (h >= 1 && k == 0 && m.letter == Letter::B) {
        const LieExpr e = lie_adpow(K(), 1, h - 1, lie_adpow(B(), -1, l, K()));
        return lie_scale(((one - p).pow(l) * (one - pp(l)).pow(h - 1)).inverse(), e);
    }
    if (h == 1 && l == 0) {
        // K C^l = alpha [K C^{l-1} A, B] + beta K C^{l-1}
        const RF alpha = (one - pp(2)) * pp(2 * k - 3) / (one - pp(2 * k - 1));
        const RF beta = (one - pp(2 * k - 3)) / (one - pp(2 * k - 1));
        return lie_sum({lie_scale(alpha, lie_bracket(W(1, k - 1, 1, Letter::A), B())),
                        lie_scale(beta, k == 1 ? K() : W(1, k - 1, 0, Letter::None))});
    }
    return nullptr;
}

std::string ratio_note(const PElement& value, const PMonomial& m) {
    return "printed form evaluates to " + value.to_string() + " instead of " + m.to_string();
}

WitnessRecord build_witness(const PMonomial& m) {
    WitnessRecord rec{m, nullptr, false, "", true, ""};
    const PElement target(m);
    const Printed pr = printed_form(m);
    rec.formula = pr.formula;
    const PElement v = eval_lie(pr.expr);
    if (v == target) {
        rec.expr = pr.expr;
        rec.verified = true;
        return rec;
    }
    rec.printed_ok = false;
    rec.note = ratio_note(v, m);
    if (LieExpr alt = corrected_form(m)) {
        rec.expr = alt;
        rec.verified = eval_lie(alt) == target;
        rec.note += "; corrected identity used";
    } else {
        rec.expr = pr.expr;
    }
    return rec;
}

std::mutex memo_mutex;
std::map<PMonomial, WitnessRecord> memo;

WitnessRecord witness_cached(const PMonomial& m) {
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
    }
    WitnessRecord rec = build_witness(m);
    std::lock_guard lock(memo_mutex);
    return memo.emplace(m, std::move(rec)).first->second;
}

} // namespace

WitnessRecord witness_for_basis(const PMonomial& m) {
    if (m.is_one()) throw MathError("1 is not a Lie polynomial");
    return witness_cached(m);
}

LieExpr printed_witness(const PMonomial& m) {
    if (m.is_one()) throw MathError("1 is not a Lie polynomial");
    return printed_form(m).expr;
}

WitnessReport verify_all_witnesses(long bound) {
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    WitnessReport rep;
    rep.bound = bound;
    for (long h = 0; h <= bound; ++h)
        for (long k = 0; k <= bound; ++k) {
            if (k >= 1 && h > 1) continue;
            for (long l = 0; l <= bound; ++l)
                for (Letter x : {Letter::None, Letter::A, Letter::B}) {
                    if ((x == Letter::None) != (l == 0)) continue;
                    const PMonomial m(h, k, l, x);
                    if (m.is_one()) continue;
                    WitnessRecord r = witness_for_basis(m);
                    if (!r.verified) rep.failures.push_back(m);
                    if (!r.printed_ok) rep.corrected.push_back(r);
                    rep.records.push_back(std::move(r));
                }
        }
    return rep;
}

} // namespace qheis
