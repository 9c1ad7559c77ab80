#pragma once

// Deformed commutator maps and the reductions of a nonzero element to a C-power.
//   theta_n(x) = A x - q^n x A
//   eta_n(x)   = B x - q^n x B

#include "qheis/proto.hpp"

#include <string>
#include <vector>

namespace qheis {

enum class DcmKind { Theta, Eta };

struct DcmMap {
    DcmKind kind = DcmKind::Theta;
    HalfInteger shift;

    static DcmMap theta(HalfInteger n) { return {DcmKind::Theta, n}; }
    static DcmMap eta(HalfInteger n) { return {DcmKind::Eta, n}; }
    std::string to_string() const;
    friend bool operator==(const DcmMap&, const DcmMap&) = default;
};

PElement apply_dcm(const DcmMap& m, const PElement& x);
HElement apply_dcm(const DcmMap& m, const HElement& x);

// Term-wise D_q in the indeterminate B. Throws MathError on any C or A factor.
HElement q_derivative(const HElement& f);

// theta_{k+n-1} o ... o theta_{k+1} o theta_k applied to C^k B^l. Requires n <= l.
HElement dcm_power_formula(long k, long n, long l);

struct ReductionStep {
    enum class Op { Dcm, LeftMul, Scale };
    Op op = Op::Dcm;
    DcmMap map;
    PElement elem;
    RationalFunction c;

    static ReductionStep dcm(DcmMap m) { return {Op::Dcm, m, {}, {}}; }
    static ReductionStep left_mul(PElement e) { return {Op::LeftMul, {}, std::move(e), {}}; }
    static ReductionStep scale(RationalFunction s) { return {Op::Scale, {}, {}, std::move(s)}; }
    PElement apply(const PElement& x) const;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    RationalFunction result_scalar;
    long result_exponent = 0;
};

// Both reducers throw MathError("zero element has no reduction") on 0.
ReductionTrace reduce_H_to_C_power(const HElement& x);
ReductionTrace reduce_P_to_C_power(const PElement& x);

PElement replay_trace(const ReductionTrace& t, const PElement& x);

} // namespace qheis
