#pragma once

// AW(3) realised inside P through the q-oscillator: K0 = K, K1 = A + B.
// Relations, written with e^w = p^-1:
//   p^-1 K0 K1 - p K1 K0 = K2
//   p^-1 K2 K0 - p K0 K2 = b K0 + c1 K1 + d1
//   p^-1 K1 K2 - p K2 K1 = b K1 + c0 K0 + d0

#include "qheis/liewitness.hpp"

#include <string>
#include <vector>

namespace qheis {

struct AWParams {
    RationalFunction b, c0, c1, d0, d1;
    // b = c1 = d0 = d1 = 0, c0 = (1 - p^2)/p^2
    static AWParams standard();
};

struct AWGenerators {
    PElement K0, K1, K2;
};

// K2 = p^-1(1-p) KA + p^-1(1-p^3) KB
AWGenerators aw_generators();

struct AWRelation {
    std::string name;
    PElement residual;
    bool zero = false;
};

struct AWRelationReport {
    std::vector<AWRelation> relations;
    bool all_zero = false;
    // Same relations with e^w = p^(-1/2), cleared of half powers by using
    // K2' = p^-1 K0 K1 - K1 K0 in place of K2. Diagnostic only.
    std::vector<AWRelation> half_power_variant;
};

AWRelationReport verify_aw_relations(const AWParams& params = AWParams::standard());

struct AWExpression {
    std::string target;
    LieExpr expr;
    PElement value;
    PElement expected;
    bool verified = false;
};

struct AWGeneratorsReport {
    std::vector<AWExpression> expressions; // K, KA, KB, X, Y, Z, KC, A, B
    bool all_verified = false;
    // X - Z - p(1+p+p^2) Y evaluated; zero means X, Y, Z cannot isolate KC.
    PElement xyz_dependency;
};

AWGeneratorsReport generators_from_aw();

struct AWMonomialCheck {
    PMonomial monomial;
    LieExpr expr; // null for 1
    PElement value;
    bool confirmed = false;
};

struct AWEqualsPReport {
    long bound = 0;
    std::vector<AWMonomialCheck> checks;
    std::size_t confirmed = 0;
};

AWEqualsPReport aw_equals_p_report(long bound);

} // namespace qheis
