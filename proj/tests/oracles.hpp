#pragma once

// Independent closed forms shared by the unit tests and the acceptance run.

#include "qheis/dcm.hpp"

#include <vector>

namespace qheis::testing {

using RF = RationalFunction;

// Closed forms for theta_n, eta_n on basis monomials; qn = q^n.
inline HElement theta_closed(const HMonomial& m, const RF& qn) {
    const long k = m.k, l = m.l;
    const RF one(1), q = RF::q();
    const RF qk = RF::q_pow(k);
    if (m.letter == Letter::None) return HElement(HMonomial::a(k, 1), qk * (one - qn * RF::q_pow(-k)));
    if (m.letter == Letter::A) return HElement(HMonomial::a(k, l + 1), qk * (one - qn * RF::q_pow(-k)));
    const HMonomial lower = l == 1 ? HMonomial::c_power(k) : HMonomial::b(k, l - 1);
    const HMonomial upper = l == 1 ? HMonomial::c_power(k + 1) : HMonomial::b(k + 1, l - 1);
    HElement out(lower, qk * (one - qn * RF::q_pow(-k)) / (one - q));
    out.add(upper, -RF::q_pow(k + 1) * (one - qn * RF::q_pow(-k - l)) / (one - q));
    return out;
}

inline HElement eta_closed(const HMonomial& m, const RF& qn) {
    const long k = m.k, l = m.l;
    const RF one(1), q = RF::q();
    const RF qmk = RF::q_pow(-k);
    if (m.letter == Letter::None) return HElement(HMonomial::b(k, 1), qmk * (one - qn * RF::q_pow(k)));
    if (m.letter == Letter::B) return HElement(HMonomial::b(k, l + 1), qmk * (one - qn * RF::q_pow(k)));
    const HMonomial lower = l == 1 ? HMonomial::c_power(k) : HMonomial::a(k, l - 1);
    const HMonomial upper = l == 1 ? HMonomial::c_power(k + 1) : HMonomial::a(k + 1, l - 1);
    HElement out(lower, qmk * (one - qn * RF::q_pow(k)) / (one - q));
    out.add(upper, -qmk * (one - qn * RF::q_pow(k + l)) / (one - q));
    return out;
}

inline std::vector<HalfInteger> half_shifts(long bound) {
    std::vector<HalfInteger> out;
    for (long t = -2 * bound; t <= 2 * bound; ++t) out.push_back(HalfInteger::from_twice(t));
    return out;
}

} // namespace qheis::testing
