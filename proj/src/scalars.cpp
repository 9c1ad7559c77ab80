#include "qheis/scalars.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace qheis {

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

Poly::Poly(mpz_class c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(mpz_class c, std::size_t degree) {
    Poly r;
    if (c == 0) return r;
    r.coeffs_.assign(degree + 1, mpz_class(0));
    r.coeffs_[degree] = std::move(c);
    return r;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Poly::low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return i;
    return 0;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lead() < 0) g = -g;
    if (g == 1) return *this;
    Poly r = *this;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    const Poly& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const Poly& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
    Poly r = big;
    for (std::size_t i = 0; i < small.coeffs_.size(); ++i) r.coeffs_[i] += small.coeffs_[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const mpz_class& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.coeffs_.assign(k, mpz_class(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Poly Poly::unshifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
    return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::logic_error("Poly::divexact by zero");
    if (a.is_zero()) return {};
    if (b.coeffs_.size() == 1) {
        Poly r = a;
        for (auto& c : r.coeffs_) {
            if (!mpz_divisible_p(c.get_mpz_t(), b.coeffs_[0].get_mpz_t()))
                throw std::logic_error("Poly::divexact: inexact division");
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.coeffs_[0].get_mpz_t());
        }
        return r;
    }
    if (a.degree() < b.degree()) throw std::logic_error("Poly::divexact: inexact division");
    std::vector<mpz_class> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    std::vector<mpz_class> quo(rem.size() - db, mpz_class(0));
    mpz_class t;
    for (std::size_t i = quo.size(); i-- > 0;) {
        mpz_class& top = rem[i + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
            throw std::logic_error("Poly::divexact: inexact division");
        mpz_divexact(quo[i].get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(rem[i + j].get_mpz_t(), quo[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < db; ++i)
        if (rem[i] != 0) throw std::logic_error("Poly::divexact: inexact division");
    return Poly(std::move(quo));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b), with the multiplier lead(b)^k
// applied incrementally.
Poly pseudo_remainder(const Poly& a, const Poly& b) {
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const mpz_class& lb = b.lead();
    while (r.size() > db) {
        if (r.back() == 0) {
            r.pop_back();
            continue;
        }
        mpz_class lr = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
        r.pop_back();
    }
    return Poly(std::move(r));
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive_part().scaled(b.content());
    if (b.is_zero()) return a.primitive_part().scaled(a.content());
    mpz_class cg;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const std::size_t t = std::min(a.low_degree(), b.low_degree());
    Poly x = a.unshifted(t).primitive_part();
    Poly y = b.unshifted(t).primitive_part();
    // Remaining powers of p cannot be common any more.
    x = x.unshifted(x.low_degree());
    y = y.unshifted(y.low_degree());
    if (x.is_constant() || y.is_constant()) return Poly::monomial(cg, t);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.is_constant()) return Poly::monomial(cg, t);
        Poly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part().scaled(cg).shifted(t);
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

namespace {

void append_term(std::string& out, const mpz_class& c, std::size_t e, bool first) {
    mpz_class mag = abs(c);
    if (c < 0) out += "-";
    else if (!first) out += "+";
    if (e == 0) {
        out += mag.get_str();
        return;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "p";
    if (e > 1) out += "^" + std::to_string(e);
}

std::string poly_text(const Poly& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        append_term(out, x.coeffs()[i], i, first);
        first = false;
    }
    return out;
}

std::size_t term_count(const Poly& x) {
    return static_cast<std::size_t>(std::count_if(x.coeffs().begin(), x.coeffs().end(),
                                                  [](const mpz_class& c) { return c != 0; }));
}

} // namespace

std::ostream& operator<<(std::ostream& os, const Poly& x) { return os << poly_text(x); }

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const mpq_class& c)
    : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den())) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("division by zero in Q(p)");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!(g == Poly(1))) {
        num_ = Poly::divexact(num_, g);
        den_ = Poly::divexact(den_, g);
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::p_pow(long e) {
    if (e >= 0) return RationalFunction(Poly::monomial(1, static_cast<std::size_t>(e)));
    RationalFunction r;
    r.num_ = Poly(1);
    r.den_ = Poly::monomial(1, static_cast<std::size_t>(-e));
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw MathError("division by zero in Q(p)");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ = num_ + o.num_;
        canonicalize();
        return *this;
    }
    const Poly g = Poly::gcd(den_, o.den_);
    const Poly b1 = Poly::divexact(den_, g);
    const Poly d1 = Poly::divexact(o.den_, g);
    Poly n = num_ * d1 + o.num_ * b1;
    Poly d = den_ * d1;
    if (n.is_zero()) return *this = RationalFunction();
    if (!(g == Poly(1))) {
        const Poly h = Poly::gcd(n, g);
        if (!(h == Poly(1))) {
            n = Poly::divexact(n, h);
            d = Poly::divexact(d, h);
        }
    }
    num_ = std::move(n);
    den_ = std::move(d);
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    const Poly g1 = Poly::gcd(num_, o.den_);
    const Poly g2 = Poly::gcd(o.num_, den_);
    Poly n = Poly::divexact(num_, g1) * Poly::divexact(o.num_, g2);
    Poly d = Poly::divexact(den_, g2) * Poly::divexact(o.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

mpq_class RationalFunction::eval_at(const mpq_class& p_value) const {
    mpq_class d = den_.eval(p_value);
    if (d == 0) throw MathError("pole at p_value " + p_value.get_str());
    mpq_class r = num_.eval(p_value) / d;
    r.canonicalize();
    return r;
}

std::string RationalFunction::to_string() const {
    if (den_ == Poly(1)) return poly_text(num_);
    // Display with the lowest-order denominator coefficient positive: 1/(1-p^2)
    // rather than the stored -1/(p^2-1).
    Poly n = num_, d = den_;
    if (d.coeff(d.low_degree()) < 0) {
        n = -n;
        d = -d;
    }
    std::string out;
    if (term_count(n) > 1) out += "(" + poly_text(n) + ")";
    else out += poly_text(n);
    out += "/";
    const bool bare_den = term_count(d) == 1 && (d.degree() == 0 || d.lead() == 1);
    if (bare_den) out += poly_text(d);
    else out += "(" + poly_text(d) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& x) { return os << x.to_string(); }

std::string HalfInteger::to_string() const {
    if (is_integer()) return std::to_string(value());
    return std::to_string(twice_) + "/2";
}

// ------------------------------------------------------- q-combinatorics

RationalFunction q_integer(long n) {
    if (n < 0) throw MathError("q_integer requires n >= 0");
    std::vector<mpz_class> c(n > 0 ? static_cast<std::size_t>(2 * n - 1) : 0, mpz_class(0));
    for (long i = 0; i < n; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
    return RationalFunction(Poly(std::move(c)));
}

RationalFunction q_factorial(long n) {
    if (n < 0) throw MathError("q_factorial requires n >= 0");
    RationalFunction r(1);
    for (long j = 1; j <= n; ++j) r *= q_integer(j);
    return r;
}

namespace {

// Gaussian binomials as integer polynomials in p, grown row by row.
std::mutex g_binom_mutex;
std::vector<std::vector<Poly>> g_binom_rows{{Poly(1)}};

const Poly& binomial_poly(long n, long k) {
    std::lock_guard lock(g_binom_mutex);
    while (static_cast<long>(g_binom_rows.size()) <= n) {
        const auto& prev = g_binom_rows.back();
        const long m = static_cast<long>(g_binom_rows.size()); // new row index
        std::vector<Poly> row(static_cast<std::size_t>(m + 1));
        row[0] = Poly(1);
        for (long kk = 0; kk < m; ++kk) {
            // binom(m, kk+1) = binom(m-1, kk) + q^(kk+1) binom(m-1, kk+1)
            Poly v = prev[static_cast<std::size_t>(kk)];
            if (kk + 1 <= m - 1)
                v = v + prev[static_cast<std::size_t>(kk + 1)].shifted(static_cast<std::size_t>(2 * (kk + 1)));
            row[static_cast<std::size_t>(kk + 1)] = std::move(v);
        }
        g_binom_rows.push_back(std::move(row));
    }
    return g_binom_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace

RationalFunction q_binomial(long n, long k) {
    if (n < 0 || k < 0) throw MathError("q_binomial requires n, k >= 0");
    if (k > n) return RationalFunction();
    return RationalFunction(binomial_poly(n, k));
}

RationalFunction c_coeff(long l, long i) {
    if (l < 1 || i < 0 || i > l) throw MathError("c_coeff requires 1 <= l and 0 <= i <= l");
    static std::mutex mutex;
    static std::map<std::pair<long, long>, RationalFunction> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({l, i}); it != cache.end()) return it->second;
    }
    RationalFunction qm1 = RationalFunction::q() - RationalFunction(1);
    RationalFunction r = qm1.pow(-l) * RationalFunction::q_pow(i * (i + 1) / 2) * q_binomial(l, i);
    if ((l - i) % 2 != 0) r = -r;
    std::lock_guard lock(mutex);
    return cache.emplace(std::pair{l, i}, r).first->second;
}

} // namespace qheis
