#pragma once

// The q-deformed Heisenberg algebra H(q) = <A, B | AB - qBA = 1> on the basis
// C^k, C^k A^l, C^k B^l with C = [A, B].

#include "qheis/linear.hpp"
#include "qheis/scalars.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qheis {

enum class Letter { None, A, B };

// C^k X^l with X = letter; letter == None exactly when l == 0.
struct HMonomial {
    long k = 0;
    long l = 0;
    Letter letter = Letter::None;

    HMonomial() = default;
    HMonomial(long k_, long l_, Letter letter_);
    static HMonomial c_power(long k) { return {k, 0, Letter::None}; }
    static HMonomial a(long k, long l) { return {k, l, Letter::A}; }
    static HMonomial b(long k, long l) { return {k, l, Letter::B}; }

    bool is_one() const { return k == 0 && l == 0; }
    std::string to_string() const;

    friend bool operator==(const HMonomial&, const HMonomial&) = default;
    // Display order: grade descending, then k ascending.
    friend bool operator<(const HMonomial& x, const HMonomial& y);
};

using HElement = Linear<HMonomial>;

// +l for C^k B^l, -l for C^k A^l, 0 for C^k.
long grade(const HMonomial& m);

HElement h_gen_a();
HElement h_gen_b();
HElement h_gen_c();

// Product of two basis monomials from the associative structure constants.
HElement h_mul(const HMonomial& x, const HMonomial& y);
HElement h_mul(const HElement& x, const HElement& y);
HElement h_commutator(const HElement& x, const HElement& y);

// Lie structure constants as printed in the closed-form tables (including the
// exponents E(i), F(i), G(i) exactly as given). Not guaranteed to agree with
// h_commutator; see closed_form_errata.
HElement h_commutator_closed_form(const HMonomial& u, const HMonomial& v);

struct ClosedFormDiscrepancy {
    std::string formula; // "A-B n=s", "A-B n<s", "A-B n>s", "A-A", "B-B"
    long m, n, r, s;     // u = C^m X^n, v = C^r Y^s
    long i;              // summand index (exponent offset of C in the output monomial)
    HMonomial monomial;
    RationalFunction printed;
    RationalFunction actual;
};

// Every coefficient where the closed form disagrees with the product
// difference, over all pairs C^m X^n, C^r Y^s with m, r <= max_c and
// 1 <= n, s <= max_ladder (letters A, B in both slots). Deterministic order.
std::vector<ClosedFormDiscrepancy> closed_form_errata(long max_c, long max_ladder);

std::map<long, HElement> graded_components(const HElement& x);

struct GammaLieSplit {
    HElement gamma; // span of 1, A^l, B^l (l >= 2)
    HElement lie;   // everything else
};
GammaLieSplit gamma_lie_split(const HElement& x);

} // namespace qheis
