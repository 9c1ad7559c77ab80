#pragma once

// Nested-commutator expressions and explicit Lie-polynomial witnesses for the
// basis monomials of P.

#include "qheis/proto.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace qheis {

enum class GenSymbol { K, A, B, C, K0, K1, K2 };

struct LieNode;
using LieExpr = std::shared_ptr<const LieNode>;

struct LieNode {
    struct Gen {
        GenSymbol symbol;
    };
    struct Bracket {
        LieExpr left, right;
    };
    struct Scale {
        RationalFunction c;
        LieExpr arg;
    };
    struct Sum {
        std::vector<LieExpr> terms;
    };
    // (sign * ad base)^power (arg)
    struct AdPow {
        LieExpr base;
        int sign;
        long power;
        LieExpr arg;
    };
    std::variant<Gen, Bracket, Scale, Sum, AdPow> node;
};

LieExpr lie_gen(GenSymbol s);
LieExpr lie_bracket(LieExpr x, LieExpr y);
LieExpr lie_scale(RationalFunction c, LieExpr x);
LieExpr lie_sum(std::vector<LieExpr> terms);
LieExpr lie_adpow(LieExpr base, int sign, long power, LieExpr arg);

PElement gen_value(GenSymbol s);
PElement eval_lie(const LieExpr& e);
// AdPow rewritten as nested brackets and scales.
LieExpr expand_adpow(const LieExpr& e);

// Replace generators by expressions; shared subtrees stay shared.
LieExpr lie_substitute(const LieExpr& e, const std::map<GenSymbol, LieExpr>& images);

std::string gen_name(GenSymbol s);
std::string lie_to_string(const LieExpr& e);
bool lie_structurally_equal(const LieExpr& x, const LieExpr& y);

struct WitnessRecord {
    PMonomial target;
    LieExpr expr;
    bool verified = false;
    std::string formula;  // name of the identity used
    bool printed_ok = true; // false when the identity as printed fails and a corrected form is used
    std::string note;
};

// Throws MathError("1 is not a Lie polynomial") for m = 1.
WitnessRecord witness_for_basis(const PMonomial& m);

// The identity exactly as printed, without fallback; null when m has no printed formula.
LieExpr printed_witness(const PMonomial& m);

struct WitnessReport {
    long bound = 0;
    std::vector<WitnessRecord> records;
    std::vector<PMonomial> failures;
    std::vector<WitnessRecord> corrected; // records whose printed identity had to be replaced
};

WitnessReport verify_all_witnesses(long bound);

} // namespace qheis
