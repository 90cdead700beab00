#pragma once

// Elements of C_n: linear combinations of degree-n Chern monomials, stored
// sparsely on the partition basis.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "rational.hpp"

namespace chernum {

template <CoefficientRing C>
class BasicChernVector {
public:
    using Terms = std::map<Partition, C, CanonicalOrder>;

    explicit BasicChernVector(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? C(Rational(0)) : it->second;
    }

    /// Adds c to the coefficient of p. Zero results are erased.
    void add(const Partition& p, const C& c) {
        if (p.weight() != degree_) throw std::invalid_argument("partition not of weight n");
        if (chernum::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted) {
            it->second = it->second + c;
            if (chernum::is_zero(it->second)) terms_.erase(it);
        }
    }
    void set(const Partition& p, const C& c) {
        if (p.weight() != degree_) throw std::invalid_argument("partition not of weight n");
        terms_.erase(p);
        add(p, c);
    }

    BasicChernVector& operator+=(const BasicChernVector& o) {
        same_degree(o);
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }
    BasicChernVector& operator-=(const BasicChernVector& o) {
        same_degree(o);
        for (const auto& [p, c] : o.terms_) add(p, C(Rational(0)) - c);
        return *this;
    }
    friend BasicChernVector operator+(BasicChernVector a, const BasicChernVector& b) { return a += b; }
    friend BasicChernVector operator-(BasicChernVector a, const BasicChernVector& b) { return a -= b; }

    BasicChernVector scaled(const Rational& s) const {
        BasicChernVector out(degree_);
        for (const auto& [p, c] : terms_) out.add(p, scale(c, s));
        return out;
    }
    friend BasicChernVector operator*(const Rational& s, const BasicChernVector& v) { return v.scaled(s); }

    /// Dense coordinates in canonical basis order.
    std::vector<C> dense(const PartitionBasis& basis) const {
        if (basis.degree() != degree_) throw std::invalid_argument("basis degree mismatch");
        std::vector<C> out(basis.size(), C(Rational(0)));
        for (const auto& [p, c] : terms_) out[basis.index_of(p)] = c;
        return out;
    }
    std::vector<C> dense() const { return dense(PartitionBasis(degree_)); }

    static BasicChernVector from_dense(const PartitionBasis& basis, const std::vector<C>& coords) {
        if (coords.size() != basis.size()) throw std::invalid_argument("coordinate count differs from pi(n)");
        BasicChernVector v(basis.degree());
        for (std::size_t i = 0; i < coords.size(); ++i) v.add(basis[i], coords[i]);
        return v;
    }

    friend bool operator==(const BasicChernVector& a, const BasicChernVector& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void same_degree(const BasicChernVector& o) const {
        if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
    }

    int degree_;
    Terms terms_;
};

using ChernVector = BasicChernVector<Rational>;

/// "c3*c1^2" for [3,1,1].
inline std::string to_monomial_string(const Partition& p) {
    if (p.empty()) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < p.length()) {
        const int part = p.parts()[i];
        std::size_t j = i;
        while (j < p.length() && p.parts()[j] == part) ++j;
        if (!s.empty()) s += '*';
        s += "c" + std::to_string(part);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

/// "1/12*c2 + 1/12*c1^2", terms in canonical order, unit coefficients dropped.
inline std::string to_string(const ChernVector& v) {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : v.terms()) {
        if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) s += "-";
        const Rational magnitude = abs(c);
        if (magnitude != 1) s += to_string(magnitude) + "*";
        s += to_monomial_string(p);
    }
    return s;
}

}  // namespace chernum
