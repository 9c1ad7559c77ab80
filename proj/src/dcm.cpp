#include "qheis/dcm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qheis {

using RF = RationalFunction;

std::string DcmMap::to_string() const {
    return std::string(kind == DcmKind::Theta ? "theta_" : "eta_") + shift.to_string();
}

PElement apply_dcm(const DcmMap& m, const PElement& x) {
    const PElement g = m.kind == DcmKind::Theta ? p_gen_a() : p_gen_b();
    return p_mul(g, x) - m.shift.q_power() * p_mul(x, g);
}

HElement apply_dcm(const DcmMap& m, const HElement& x) { return restrict_to_h(apply_dcm(m, embed_h(x))); }

HElement q_derivative(const HElement& f) {
    HElement out;
    for (const auto& [m, c] : f) {
        if (m.k != 0 || m.letter == Letter::A) throw MathError("not a B-polynomial");
        if (m.l == 0) continue;
        out.add(m.l == 1 ? HMonomial::c_power(0) : HMonomial::b(0, m.l - 1), q_integer(m.l) * c);
    }
    return out;
}

HElement dcm_power_formula(long k, long n, long l) {
    if (k < 0 || n < 0 || l < 1) throw MathError("dcm_power_formula: need k >= 0, n >= 0, l >= 1");
    if (n > l) throw MathError("dcm_power_formula requires n <= l");
    const RF c = RF::q_pow(n * (k - l + n)) * q_factorial(n) * q_binomial(l, n);
    const HMonomial m = l == n ? HMonomial::c_power(k + n) : HMonomial::b(k + n, l - n);
    return HElement(m, c);
}

PElement ReductionStep::apply(const PElement& x) const {
    switch (op) {
    case Op::Dcm: return apply_dcm(map, x);
    case Op::LeftMul: return p_mul(elem, x);
    case Op::Scale: return c * x;
    }
    return x;
}

PElement replay_trace(const ReductionTrace& t, const PElement& x) {
    PElement y = x;
    for (const auto& s : t.steps) y = s.apply(y);
    return y;
}

namespace {

struct Reducer {
    PElement x;
    std::vector<ReductionStep> steps;

    void push(ReductionStep s) {
        x = s.apply(x);
        steps.push_back(std::move(s));
        if (x.is_zero()) throw std::logic_error("reduction reached zero");
    }
    void dcm(DcmKind kind, long n) { push(ReductionStep::dcm({kind, HalfInteger(n)})); }

    const PMonomial& single() const { return x.begin()->first; }
    bool is_c_power() const {
        if (x.size() != 1) return false;
        const auto& m = single();
        return m.h == 0 && m.l == 0 && m.k >= 1;
    }
    std::set<long> grades() const {
        std::set<long> g;
        for (const auto& [m, c] : x) g.insert(m.grade());
        return g;
    }
    std::set<long> c_degrees() const {
        std::set<long> d;
        for (const auto& [m, c] : x) d.insert(m.k);
        return d;
    }
};

// x is an H-element embedded in P.
void reduce_h_inplace(Reducer& r) {
    // Phase 1: raise every grade to at least 1.
    while (r.x.size() > 1 && *r.grades().begin() < 1) r.dcm(DcmKind::Eta, 1);

    // Several grades at once: eta_{-k} is diagonal on C^k B^l and kills the C^k terms,
    // leaving one C-degree; theta at that degree then lowers every B-power and kills
    // the lowest one as it reaches B^0.
    if (r.x.size() > 1 && r.grades().size() > 1) {
        const auto degs = r.c_degrees();
        for (auto it = degs.begin(); std::next(it) != degs.end(); ++it) r.dcm(DcmKind::Eta, -*it);
        while (r.grades().size() > 1) {
            const auto d = r.c_degrees();
            if (d.size() != 1) throw std::logic_error("grade separation left several C-degrees");
            r.dcm(DcmKind::Theta, *d.begin());
        }
    }

    // Phase 2: gamma(C) B^b down to F[C].
    while (r.x.size() > 1 && *r.grades().begin() > 0) {
        const long b = *r.grades().begin();
        r.dcm(DcmKind::Theta, *r.c_degrees().rbegin() + b + 1);
    }

    // Phase 3: shrink the C-degree range of a polynomial in C.
    while (r.x.size() > 1) {
        if (r.grades() != std::set<long>{0}) throw std::logic_error("phase 3 expects a polynomial in C");
        const auto d = r.c_degrees();
        const long k = *d.begin(), n = *d.rbegin() - k;
        r.dcm(DcmKind::Eta, -k);
        r.dcm(DcmKind::Theta, k + n + 1);
    }

    // One monomial left: climb to a positive C-power.
    while (!r.is_c_power()) {
        const PMonomial m = r.single();
        if (m.l == 0) r.dcm(DcmKind::Eta, 1);
        else if (m.letter == Letter::A) r.dcm(DcmKind::Eta, -m.k);
        else r.dcm(DcmKind::Theta, m.k);
    }
}

ReductionTrace finish(Reducer& r) {
    ReductionTrace t;
    t.steps = std::move(r.steps);
    t.result_scalar = r.x.begin()->second;
    t.result_exponent = r.x.begin()->first.k;
    return t;
}

} // namespace

ReductionTrace reduce_H_to_C_power(const HElement& x) {
    if (x.is_zero()) throw MathError("zero element has no reduction");
    Reducer r{embed_h(x), {}};
    reduce_h_inplace(r);
    return finish(r);
}

ReductionTrace reduce_P_to_C_power(const PElement& x) {
    if (x.is_zero()) throw MathError("zero element has no reduction");
    long n = 0;
    for (const auto& [m, c] : x) n = std::max(n, m.h / 2);
    Reducer r{x, {}};
    if (n > 0) r.push(ReductionStep::left_mul(p_monomial(0, n, 0, Letter::None)));

    // Now x = f + K g with f, g in H(q).
    PElement f, kg;
    for (const auto& [m, c] : r.x) (m.h == 0 ? f : kg).add(m, c);
    const PElement kc = p_monomial(1, 1, 0, Letter::None);

    if (!f.is_zero() && !kg.is_zero()) {
        Reducer rf{f, {}};
        reduce_h_inplace(rf);
        // Each integer map on K g acts as a half-shifted map on g, scaled by p^-1 (theta) or p (eta).
        long p_exp = 0;
        for (const auto& s : rf.steps) {
            r.push(s);
            p_exp += s.map.kind == DcmKind::Theta ? -1 : 1;
        }
        r.dcm(DcmKind::Theta, rf.x.begin()->first.k);
        --p_exp;
        for (const auto& [m, c] : r.x)
            if (m.h != 1) throw std::logic_error("theta_H left a term outside K H(q)");
        r.push(ReductionStep::left_mul(kc));
        if (p_exp != 0) r.push(ReductionStep::scale(RF::p_pow(-p_exp)));
    } else if (f.is_zero()) {
        r.push(ReductionStep::left_mul(kc));
    }
    reduce_h_inplace(r);
    return finish(r);
}

} // namespace qheis
