#pragma once

// Exact scalars: polynomials over Z in the indeterminate p, the field Q(p) of
// their quotients (q = p^2 throughout), and q-combinatorial quantities.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qheis {

// Raised for mathematically undefined requests: division by zero, poles,
// reduction of the zero element, domain violations.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense integer polynomial in p; coeffs_[i] is the coefficient of p^i.
// No trailing zero coefficients are ever stored, so zero is the empty vector.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    explicit Poly(mpz_class c);
    explicit Poly(std::vector<mpz_class> coeffs);

    static Poly monomial(mpz_class c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Exponent of the lowest nonzero term; 0 for the zero polynomial.
    std::size_t low_degree() const;
    const mpz_class& lead() const { return coeffs_.back(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

    mpz_class content() const;   // nonnegative gcd of the coefficients
    Poly primitive_part() const; // sign-normalized: positive leading coefficient

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const mpz_class& c) const;
    Poly shifted(std::size_t k) const; // multiply by p^k
    Poly unshifted(std::size_t k) const; // divide by p^k, which must divide

    // Exact quotient a / b; throws std::logic_error if b does not divide a.
    static Poly divexact(const Poly& a, const Poly& b);
    // gcd in Z[p]: content gcd times primitive gcd, positive leading coefficient.
    static Poly gcd(const Poly& a, const Poly& b);

    mpq_class eval(const mpq_class& x) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// Element of Q(p). Canonical form: gcd(num, den) = 1 in Z[p] (so contents are
// coprime too), leading coefficient of den positive, zero stored as 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const mpq_class& c);
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}
    RationalFunction(Poly num, Poly den); // canonicalizes; den must be nonzero

    static RationalFunction p() { return RationalFunction(Poly::monomial(1, 1)); }
    static RationalFunction q() { return RationalFunction(Poly::monomial(1, 2)); }
    // p^e for any integer e.
    static RationalFunction p_pow(long e);
    static RationalFunction q_pow(long e) { return p_pow(2 * e); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly(1) && num_ == Poly(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    RationalFunction pow(long e) const;

    // Exact evaluation at a rational point; throws MathError at a pole.
    mpq_class eval_at(const mpq_class& p_value) const;

    // "num/den" with explicit powers of p, e.g. "1/(1-p^2)"; bare "num" when den = 1.
    std::string to_string() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Poly& x);
std::ostream& operator<<(std::ostream& os, const RationalFunction& x);

// Free-function spellings of the field operations.
inline RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
inline RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
inline RationalFunction rf_neg(const RationalFunction& a) { return -a; }
inline RationalFunction rf_inv(const RationalFunction& a) { return a.inverse(); }
inline mpq_class eval_at(const RationalFunction& x, const mpq_class& p_value) { return x.eval_at(p_value); }

// Half-integer n stored as 2n. q^n = p^(2n) is then an integer power of p.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    constexpr HalfInteger(long n) : twice_(2 * n) {}
    static constexpr HalfInteger from_twice(long t) { HalfInteger h; h.twice_ = t; return h; }

    constexpr long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // Only valid when is_integer().
    constexpr long value() const { return twice_ / 2; }

    constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInteger operator-() const { return from_twice(-twice_); }
    constexpr auto operator<=>(const HalfInteger&) const = default;

    // q^n as an element of Q(p).
    RationalFunction q_power() const { return RationalFunction::p_pow(twice_); }
    std::string to_string() const;

private:
    long twice_ = 0;
};

inline constexpr HalfInteger kHalf = HalfInteger::from_twice(1);

// {n}_q = 1 + q + ... + q^(n-1).
RationalFunction q_integer(long n);
// {n}_q! = {1}_q {2}_q ... {n}_q.
RationalFunction q_factorial(long n);
// Gaussian binomial via the Pascal-type recursion; zero for k > n.
RationalFunction q_binomial(long n, long k);
// c_i(l) = (q-1)^(-l) (-1)^(l-i) q^binom(i+1,2) binom(l,i)_q, the coefficients of
// A^l B^l = sum_i c_i(l) C^i.
RationalFunction c_coeff(long l, long i);

} // namespace qheis
