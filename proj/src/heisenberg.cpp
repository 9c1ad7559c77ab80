#include "qheis/heisenberg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qheis {

HMonomial::HMonomial(long k_, long l_, Letter letter_) : k(k_), l(l_), letter(letter_) {
    if (k < 0 || l < 0) throw std::invalid_argument("HMonomial exponents must be nonnegative");
    if ((letter == Letter::None) != (l == 0))
        throw std::invalid_argument("HMonomial: letter is None exactly when l == 0");
}

std::string HMonomial::to_string() const {
    if (is_one()) return "1";
    std::string out;
    auto factor = [&out](const char* sym, long e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += sym;
        if (e > 1) out += "^" + std::to_string(e);
    };
    factor("C", k);
    factor(letter == Letter::A ? "A" : "B", l);
    return out;
}

bool operator<(const HMonomial& x, const HMonomial& y) {
    const long gx = grade(x), gy = grade(y);
    if (gx != gy) return gx > gy;
    return x.k < y.k;
}

long grade(const HMonomial& m) {
    switch (m.letter) {
    case Letter::A: return -m.l;
    case Letter::B: return m.l;
    case Letter::None: return 0;
    }
    return 0;
}

HElement h_gen_a() { return HElement(HMonomial::a(0, 1)); }
HElement h_gen_b() { return HElement(HMonomial::b(0, 1)); }
HElement h_gen_c() { return HElement(HMonomial::c_power(1)); }

namespace {

using RF = RationalFunction;

HMonomial ladder(long k, long l, Letter x) {
    return l == 0 ? HMonomial::c_power(k) : HMonomial(k, l, x);
}

} // namespace

HElement h_mul(const HMonomial& x, const HMonomial& y) {
    const long m = x.k, n = x.l, k = y.k, l = y.l;
    HElement out;
    if (x.letter == Letter::None) {
        out.add(ladder(m + k, l, y.letter), RF(1));
        return out;
    }
    if (y.letter == Letter::None || x.letter == y.letter) {
        // A^n C^k = q^(kn) C^k A^n and B^n C^k = q^(-kn) C^k B^n.
        const long e = x.letter == Letter::A ? k * n : -k * n;
        out.add(HMonomial(m + k, n + l, x.letter), RF::q_pow(e));
        return out;
    }
    if (x.letter == Letter::A) {
        if (n >= l) {
            for (long i = 0; i <= l; ++i)
                out.add(ladder(m + i + k, n - l, Letter::A), RF::q_pow((i + k) * n - i * l) * c_coeff(l, i));
        } else {
            for (long i = 0; i <= n; ++i)
                out.add(ladder(m + i + k, l - n, Letter::B), RF::q_pow(k * n) * c_coeff(n, i));
        }
        return out;
    }
    // C^m B^n . C^k A^l; the B^(n-l) factor sits to the right of C^(m+k+i).
    if (n >= l) {
        for (long i = 0; i <= l; ++i)
            out.add(ladder(m + k + i, n - l, Letter::B), RF::q_pow(-(i + k) * n) * c_coeff(l, i));
    } else {
        for (long i = 0; i <= n; ++i)
            out.add(ladder(m + k + i, l - n, Letter::A), RF::q_pow(-(i + k) * n) * c_coeff(n, i));
    }
    return out;
}

HElement h_mul(const HElement& x, const HElement& y) {
    HElement out;
    for (const auto& [mx, cx] : x)
        for (const auto& [my, cy] : y) {
            const RF c = cx * cy;
            for (const auto& [mz, cz] : h_mul(mx, my)) out.add(mz, c * cz);
        }
    return out;
}

HElement h_commutator(const HElement& x, const HElement& y) { return h_mul(x, y) - h_mul(y, x); }

namespace {

struct ClosedFormTerm {
    const char* formula;
    long i;
    HMonomial monomial;
    RF coeff;
};

// Closed-form summands for [C^m X^n, C^r Y^s], as printed.
std::vector<ClosedFormTerm> closed_form_terms(const HMonomial& u, const HMonomial& v) {
    const long m = u.k, n = u.l, r = v.k, s = v.l;
    const RF one(1);
    std::vector<ClosedFormTerm> out;
    const bool u_a = u.letter != Letter::B, v_a = v.letter != Letter::B;
    const bool u_b = u.letter != Letter::A, v_b = v.letter != Letter::A;
    if (u_a && v_a) {
        // Also covers C^m with n = 0 or C^r with s = 0.
        if (n + s == 0) return out;
        out.push_back({"A-A", 0, ladder(m + r, n + s, Letter::A),
                       RF::q_pow(n * r) * (one - RF::q_pow(m * s - n * r))});
        return out;
    }
    if (u_b && v_b) {
        out.push_back({"B-B", 0, ladder(m + r, n + s, Letter::B),
                       RF::q_pow(-n * r) * (one - RF::q_pow(n * r - m * s))});
        return out;
    }
    if (u.letter == Letter::A && v.letter == Letter::B) {
        if (n == s) {
            for (long i = 0; i <= n; ++i) {
                const long e = n * (m + r - i);
                out.push_back({"A-B n=s", i, HMonomial::c_power(m + i + r),
                               RF::q_pow(r * s) * (one - RF::q_pow(e)) * c_coeff(n, i)});
            }
        } else if (n < s) {
            for (long i = 0; i <= n; ++i) {
                const long f = n * (2 * m + r + n - s) - i * n - m * s;
                out.push_back({"A-B n<s", i, HMonomial::b(m + i + r, s - n),
                               RF::q_pow(n * r + (s - n) * (n - i)) * (one - RF::q_pow(f)) * c_coeff(n, i)});
            }
        } else {
            for (long i = 0; i <= s; ++i) {
                const long g = s * (m + 2 * r);
                out.push_back({"A-B n>s", i, HMonomial::a(m + i + r, n - s),
                               RF::q_pow(n * r + i * (n - s)) * (one - RF::q_pow(g)) * c_coeff(s, i)});
            }
        }
        return out;
    }
    // [C^m B^n, C^r A^s] = -[C^r A^s, C^m B^n].
    for (auto t : closed_form_terms(v, u)) {
        t.coeff = -t.coeff;
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

HElement h_commutator_closed_form(const HMonomial& u, const HMonomial& v) {
    HElement out;
    for (const auto& t : closed_form_terms(u, v)) out.add(t.monomial, t.coeff);
    return out;
}

std::vector<ClosedFormDiscrepancy> closed_form_errata(long max_c, long max_ladder) {
    std::vector<ClosedFormDiscrepancy> out;
    const std::pair<Letter, Letter> cells[] = {
        {Letter::A, Letter::A}, {Letter::A, Letter::B}, {Letter::B, Letter::B}};
    for (const auto& [lx, ly] : cells)
        for (long m = 0; m <= max_c; ++m)
            for (long n = 1; n <= max_ladder; ++n)
                for (long r = 0; r <= max_c; ++r)
                    for (long s = 1; s <= max_ladder; ++s) {
                        const HMonomial u(m, n, lx), v(r, s, ly);
                        const auto terms = closed_form_terms(u, v);
                        const HElement actual = h_commutator(HElement(u), HElement(v));
                        HElement printed;
                        for (const auto& t : terms) printed.add(t.monomial, t.coeff);
                        std::set<HMonomial> support;
                        for (const auto& [mono, c] : actual) support.insert(mono);
                        for (const auto& t : terms) support.insert(t.monomial);
                        for (const auto& mono : support) {
                            const RF a = actual.coeff(mono), pr = printed.coeff(mono);
                            if (a == pr) continue;
                            const char* name = terms.empty() ? "none" : terms.front().formula;
                            out.push_back({name, m, n, r, s, mono.k - m - r, mono, pr, a});
                        }
                    }
    return out;
}

std::map<long, HElement> graded_components(const HElement& x) {
    std::map<long, HElement> out;
    for (const auto& [m, c] : x) out[grade(m)].add(m, c);
    return out;
}

GammaLieSplit gamma_lie_split(const HElement& x) {
    GammaLieSplit out;
    for (const auto& [m, c] : x) {
        if (m.k == 0 && m.l != 1) out.gamma.add(m, c);
        else out.lie.add(m, c);
    }
    return out;
}

} // namespace qheis
