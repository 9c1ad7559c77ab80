#pragma once

// The extension P(q) of H(q) by K, with relations
//   AB = (1-qC)/(1-q), BA = (1-C)/(1-q), AC = qCA, BC = q^-1 CB,
//   AK = p^-1 KA,      BK = pKB,         CK = KC,  K^2 C = 1,
// on the normal-form basis K^h C^k X^l with k >= 1 => h in {0, 1}.

#include "qheis/heisenberg.hpp"
#include "qheis/linear.hpp"

#include <string>

namespace qheis {

struct PMonomial {
    long h = 0;
    long k = 0;
    long l = 0;
    Letter letter = Letter::None;

    PMonomial() = default;
    // Validates the letter/l pairing and the basis condition.
    PMonomial(long h_, long k_, long l_, Letter letter_);
    static PMonomial from_h(const HMonomial& m, long h = 0) { return {h, m.k, m.l, m.letter}; }

    bool is_one() const { return h == 0 && k == 0 && l == 0; }
    HMonomial core() const { return {k, l, letter}; }
    long grade() const { return letter == Letter::A ? -l : letter == Letter::B ? l : 0; }
    std::string to_string() const;

    friend bool operator==(const PMonomial&, const PMonomial&) = default;
    // grade descending, then k ascending, then h ascending.
    friend bool operator<(const PMonomial& x, const PMonomial& y);
};

using PElement = Linear<PMonomial>;

PElement p_gen_k();
PElement p_gen_a();
PElement p_gen_b();
PElement p_gen_c();
PElement p_monomial(long h, long k, long l, Letter letter);

PElement p_mul(const PMonomial& x, const PMonomial& y);
PElement p_mul(const PElement& x, const PElement& y);
PElement p_commutator(const PElement& x, const PElement& y);
PElement p_pow(const PElement& x, long e);

// scalar * letters, letters over {K, A, B, C}; empty encodes scalar * 1.
struct GeneratorWord {
    RationalFunction scalar = RationalFunction(1);
    std::string letters;
};

enum class RewriteStrategy { Leftmost, Rightmost };

// Exhaustive rewriting with the defining relations read left to right.
// Throws std::invalid_argument on letters outside {K, A, B, C}.
PElement normalize_word(const GeneratorWord& w, RewriteStrategy strategy = RewriteStrategy::Leftmost);
// Fold of p_mul over the letters of w.
PElement word_product(const GeneratorWord& w);

PElement embed_h(const HElement& x);
// Inverse of embed_h on elements with h = 0 throughout; throws otherwise.
HElement restrict_to_h(const PElement& x);
bool is_in_h(const PElement& x);

struct LieSplit {
    bool lie = false;
    RationalFunction constant_term;
    PElement remainder;
};
// P = F1 (+) L(P): x is a Lie polynomial in K, A, B, C iff its coefficient on 1 vanishes.
LieSplit is_lie_polynomial(const PElement& x);
// Membership in the Lie algebra generated by A, B alone.
bool h_lie_membership(const HElement& x);

} // namespace qheis
