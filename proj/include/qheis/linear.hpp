#pragma once

#include "qheis/scalars.hpp"

#include <map>
#include <string>
#include <utility>

namespace qheis {

// Finite sparse linear combination of basis monomials over Q(p). Zero
// coefficients are never stored, so equality is structural. Iteration follows
// Mono's ordering, which is also the display order.
template <class Mono>
class Linear {
public:
    using Map = std::map<Mono, RationalFunction>;

    Linear() = default;
    Linear(const Mono& m, RationalFunction c = RationalFunction(1)) { add(m, std::move(c)); }
    static Linear scalar(RationalFunction c) { return Linear(Mono{}, std::move(c)); }

    void add(const Mono& m, const RationalFunction& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RationalFunction coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Linear& operator+=(const Linear& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Linear& operator-=(const Linear& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Linear& operator*=(const RationalFunction& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend Linear operator+(Linear a, const Linear& b) { return a += b; }
    friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
    friend Linear operator-(Linear a) { return a *= RationalFunction(-1); }
    friend Linear operator*(const RationalFunction& s, Linear a) { return a *= s; }
    friend Linear operator*(Linear a, const RationalFunction& s) { return a *= s; }
    friend bool operator==(const Linear&, const Linear&) = default;

    // "(c1)*m1 + (c2)*m2"; unit coefficients are dropped, zero prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            if (c.is_one()) out += m.to_string();
            else out += "(" + c.to_string() + ")*" + m.to_string();
        }
        return out;
    }

private:
    Map terms_;
};

} // namespace qheis
