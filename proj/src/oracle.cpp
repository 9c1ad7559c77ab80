#include "qheis/oracle.hpp"

#include <map>
#include <stdexcept>

namespace qheis {

RatMatrix RatMatrix::identity(std::size_t dim) {
    RatMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<mpq_class>& d) {
    RatMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const mpq_class& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

// The generator matrices have at most one nonzero per column, so skipping
// zeros keeps products close to O(D^2).
RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t d = x.dim_;
    RatMatrix r(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const mpq_class& a = x.at(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                const mpq_class& b = y.at(k, j);
                if (sgn(b) != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

bool RatMatrix::equal_on_columns(const RatMatrix& o, std::size_t cols) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < cols && j < dim_; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

bool RatMatrix::column_zero(std::size_t j) const {
    for (std::size_t i = 0; i < dim_; ++i)
        if (sgn(at(i, j)) != 0) return false;
    return true;
}

const RatMatrix& TruncatedRep::generator(char letter) const {
    switch (letter) {
    case 'K': return K;
    case 'A': return A;
    case 'B': return B;
    case 'C': return C;
    default: throw std::invalid_argument(std::string("unknown generator '") + letter + "'");
    }
}

std::size_t TruncatedRep::protected_columns(const ProtectionBudget& b) const {
    return b.ladder_degree >= dim ? 0 : static_cast<std::size_t>(dim - b.ladder_degree);
}

TruncatedRep build_rep(long dim, const mpq_class& p_value) {
    if (dim < 3) throw std::invalid_argument("dimension must be at least 3");
    if (p_value <= 0 || p_value >= 1) throw std::invalid_argument("p must lie in (0,1)");
    const auto d = static_cast<std::size_t>(dim);
    const mpq_class q = p_value * p_value;
    TruncatedRep r;
    r.dim = dim;
    r.p_value = p_value;
    r.A = RatMatrix(d);
    r.B = RatMatrix(d);
    std::vector<mpq_class> kd(d), cd(d), nd(d);
    mpq_class qn = 1, qint = 0, kn = 1;
    for (std::size_t n = 0; n < d; ++n) {
        kd[n] = kn;
        cd[n] = qn;
        nd[n] = static_cast<long>(n);
        if (n > 0) r.A.at(n - 1, n) = qint; // {n}_q
        if (n + 1 < d) r.B.at(n + 1, n) = 1;
        qint += qn;
        qn *= q;
        kn /= p_value;
    }
    r.K = RatMatrix::diagonal(kd);
    r.C = RatMatrix::diagonal(cd);
    r.N = RatMatrix::diagonal(nd);
    return r;
}

namespace {

RatMatrix power(const RatMatrix& m, long e) {
    RatMatrix r = RatMatrix::identity(m.dim());
    for (long i = 0; i < e; ++i) r = r * m;
    return r;
}

} // namespace

RepValue rep_of_element(const PElement& x, const TruncatedRep& r) {
    const auto d = static_cast<std::size_t>(r.dim);
    std::map<std::pair<char, long>, RatMatrix> cache;
    auto pw = [&](char g, long e) -> const RatMatrix& {
        auto it = cache.find({g, e});
        if (it == cache.end()) it = cache.emplace(std::make_pair(g, e), power(r.generator(g), e)).first;
        return it->second;
    };
    RepValue out{RatMatrix(d), {}};
    for (const auto& [m, c] : x) {
        RatMatrix t = pw('K', m.h) * pw('C', m.k);
        if (m.l > 0) t = t * pw(m.letter == Letter::A ? 'A' : 'B', m.l);
        t *= eval_at(c, r.p_value);
        out.matrix += t;
        out.budget.ladder_degree = std::max(out.budget.ladder_degree, m.l);
    }
    return out;
}

RepValue rep_of_word(const GeneratorWord& w, const TruncatedRep& r) {
    RepValue out{RatMatrix::identity(static_cast<std::size_t>(r.dim)), {}};
    for (char ch : w.letters) {
        out.matrix = out.matrix * r.generator(ch);
        if (ch == 'A' || ch == 'B') ++out.budget.ladder_degree;
    }
    out.matrix *= eval_at(w.scalar, r.p_value);
    return out;
}

bool oracle_equal(const RepValue& x, const RepValue& y, const TruncatedRep& r) {
    const ProtectionBudget b{std::max(x.budget.ladder_degree, y.budget.ladder_degree)};
    const std::size_t cols = r.protected_columns(b);
    if (cols == 0) throw MathError("insufficient truncation dimension");
    return x.matrix.equal_on_columns(y.matrix, cols);
}

bool oracle_equal(const PElement& x, const PElement& y, const TruncatedRep& r) {
    return oracle_equal(rep_of_element(x, r), rep_of_element(y, r), r);
}

std::vector<RepRelation> verify_rep_relations(const TruncatedRep& r) {
    const auto d = static_cast<std::size_t>(r.dim);
    const mpq_class p = r.p_value, q = p * p;
    const RatMatrix I = RatMatrix::identity(d);
    auto scaled = [](RatMatrix m, const mpq_class& c) {
        m *= c;
        return m;
    };
    auto check = [&](std::string name, RatMatrix lhs, const RatMatrix& rhs, long ladder) {
        lhs -= rhs;
        const std::size_t cols = r.protected_columns({ladder});
        bool ok = cols > 0;
        for (std::size_t j = 0; ok && j < cols; ++j) ok = lhs.column_zero(j);
        return RepRelation{std::move(name), ok};
    };
    RatMatrix one_minus_c = I;
    one_minus_c -= r.C;
    return {
        check("AB - qBA = 1", r.A * r.B - scaled(r.B * r.A, q), I, 2),
        check("BA = (1-C)/(1-q)", r.B * r.A, scaled(one_minus_c, 1 / (1 - q)), 2),
        check("AC = qCA", r.A * r.C, scaled(r.C * r.A, q), 1),
        check("BC = q^-1 CB", r.B * r.C, scaled(r.C * r.B, 1 / q), 1),
        check("AK = p^-1 KA", r.A * r.K, scaled(r.K * r.A, 1 / p), 1),
        check("BK = pKB", r.B * r.K, scaled(r.K * r.B, p), 1),
        check("CK = KC", r.C * r.K, r.K * r.C, 0),
        check("K^2 C = 1", r.K * r.K * r.C, I, 0),
        check("[A,B] = C", r.A * r.B - r.B * r.A, r.C, 2),
    };
}

} // namespace qheis
