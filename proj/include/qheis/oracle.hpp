#pragma once

// Truncated Fock representation at a numeric p in (0,1), used to check the
// symbolic engine against plain matrix products.
//   A|n> = {n}_q |n-1>,  B|n> = |n+1> (B|D-1> = 0),  K|n> = p^-n |n>,  C|n> = q^n |n>
// C is kept exact on every column; only B's top transition is lost, so an
// expression with L ladder letters is exact on columns 0..D-1-L.

#include "qheis/proto.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qheis {

class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    static RatMatrix identity(std::size_t dim);
    static RatMatrix diagonal(const std::vector<mpq_class>& d);

    std::size_t dim() const { return dim_; }
    mpq_class& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const mpq_class& c);
    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
    friend RatMatrix operator+(RatMatrix x, const RatMatrix& y) { return x += y; }
    friend RatMatrix operator-(RatMatrix x, const RatMatrix& y) { return x -= y; }
    friend bool operator==(const RatMatrix& x, const RatMatrix& y) { return x.dim_ == y.dim_ && x.a_ == y.a_; }

    // Columns 0..cols-1 agree.
    bool equal_on_columns(const RatMatrix& o, std::size_t cols) const;
    bool column_zero(std::size_t j) const;

private:
    std::size_t dim_ = 0;
    std::vector<mpq_class> a_;
};

struct ProtectionBudget {
    long ladder_degree = 0;
};

struct TruncatedRep {
    long dim = 0;
    mpq_class p_value;
    RatMatrix K, A, B, C, N;

    const RatMatrix& generator(char letter) const;
    // Columns 0..D-1-budget; 0 when nothing is protected.
    std::size_t protected_columns(const ProtectionBudget& b) const;
};

// D >= 3, 0 < p < 1; std::invalid_argument otherwise.
TruncatedRep build_rep(long dim, const mpq_class& p_value);

struct RepValue {
    RatMatrix matrix;
    ProtectionBudget budget;
};

// Throws MathError on a coefficient pole at p_value.
RepValue rep_of_element(const PElement& x, const TruncatedRep& r);
RepValue rep_of_word(const GeneratorWord& w, const TruncatedRep& r);

// Throws MathError("insufficient truncation dimension") when no column is protected.
bool oracle_equal(const PElement& x, const PElement& y, const TruncatedRep& r);
bool oracle_equal(const RepValue& x, const RepValue& y, const TruncatedRep& r);

struct RepRelation {
    std::string name;
    bool holds = false;
};
// AB - qBA = 1, BA = (1-C)/(1-q), AC = qCA, BC = q^-1 CB, AK = p^-1 KA,
// BK = pKB, CK = KC, K^2 C = 1, [A,B] = C, each on protected columns.
std::vector<RepRelation> verify_rep_relations(const TruncatedRep& r);

} // namespace qheis
