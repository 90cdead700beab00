#pragma once

// Distinguished vectors and subspaces of C_n: Chern monomials, Pontryagin
// numbers, the Euler number, the Hirzebruch-Todd components T^p_n, and the
// Todd and L genera.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "chern_vector.hpp"
#include "partitions.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "symmetric.hpp"

namespace chernum {

/// Polynomial in c_1..c_n with mixed degrees; products drop degree > n.
/// c_0 = 1 is the empty partition.
class GradedChernPoly {
public:
    explicit GradedChernPoly(int top_degree) : top_(top_degree) {}

    static GradedChernPoly one(int top_degree) {
        GradedChernPoly p(top_degree);
        p.add(Partition{}, 1);
        return p;
    }

    int top_degree() const { return top_; }
    const std::map<Partition, Rational, CanonicalOrder>& terms() const { return terms_; }

    /// Terms above the truncation degree are dropped.
    void add(const Partition& p, const Rational& c) {
        if (p.weight() > top_ || sgn(c) == 0) return;
        Rational& slot = terms_[p];
        slot += c;
        if (sgn(slot) == 0) terms_.erase(p);
    }

    /// Homogeneous part of degree d.
    ChernVector component(int d) const {
        ChernVector v(d);
        for (const auto& [p, c] : terms_)
            if (p.weight() == d) v.add(p, c);
        return v;
    }

    friend GradedChernPoly operator*(const GradedChernPoly& a, const GradedChernPoly& b) {
        if (a.top_ != b.top_) throw std::invalid_argument("truncation degrees differ");
        GradedChernPoly out(a.top_);
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_)
                if (pa.weight() + pb.weight() <= a.top_) out.add(pa * pb, ca * cb);
        return out;
    }

    friend bool operator==(const GradedChernPoly&, const GradedChernPoly&) = default;

private:
    int top_;
    std::map<Partition, Rational, CanonicalOrder> terms_;
};

inline ChernVector chern_monomial(const Partition& p) {
    if (p.empty()) throw std::invalid_argument("no degree-0 Chern number");
    ChernVector v(p.weight());
    v.add(p, 1);
    return v;
}

/// p_i = c_i^2 - 2 c_{i-1} c_{i+1} + 2 c_{i-2} c_{i+2} - ... + (-1)^i 2 c_{2i},
/// with c_0 = 1 and c_j = 0 for j > n.
inline GradedChernPoly pontryagin_class(int i, int n) {
    if (i < 1) throw std::invalid_argument("Pontryagin class index must be positive");
    if (2 * i > n) throw std::invalid_argument("Pontryagin class exceeds truncation degree");
    GradedChernPoly p(n);
    p.add(Partition{i, i}, 1);
    for (int k = 1; k <= i; ++k) {
        const int lo = i - k;
        const int hi = i + k;
        const Partition monomial = lo == 0 ? Partition{hi} : Partition{hi, lo};
        p.add(monomial, k % 2 == 0 ? 2 : -2);
    }
    return p;
}

/// p_{mu_1} ... p_{mu_k} as a vector of C_{2m}.
inline ChernVector pontryagin_monomial_vector(const Partition& mu, int n) {
    if (mu.empty() || 2 * mu.weight() != n)
        throw std::invalid_argument("Pontryagin monomial weight does not match n = 2m");
    auto product = GradedChernPoly::one(n);
    for (int i : mu.parts()) product = product * pontryagin_class(i, n);
    return product.component(n);
}

inline ChernVector euler_vector(int n) {
    if (n < 1) throw std::invalid_argument("Euler number needs n >= 1");
    return chern_monomial(Partition{n});
}

/// Reduces a y-valued Chern vector to its y^p coefficient.
inline ChernVector y_coefficient(const BasicChernVector<YPolynomial>& v, int p) {
    ChernVector out(v.degree());
    for (const auto& [part, c] : v.terms()) out.add(part, c.coeff(static_cast<std::size_t>(p)));
    return out;
}

/// The degree-n term of the chi_y multiplicative sequence, y kept symbolic.
inline BasicChernVector<YPolynomial> chi_y_sequence_term(int n) {
    return multiplicative_sequence_term(chi_y_characteristic_series(n), n);
}

/// T^0_n, ..., T^n_n: y^p coefficients of the degree-n term.
inline std::vector<ChernVector> tp_vectors(int n) {
    if (n < 1) throw std::invalid_argument("T^p_n needs n >= 1");
    const auto term = chi_y_sequence_term(n);
    std::vector<ChernVector> out;
    for (int p = 0; p <= n; ++p) out.push_back(y_coefficient(term, p));
    return out;
}

/// chi_y specialized at y = y0, via the specialized series.
inline ChernVector chi_y_vector(int n, const Rational& y0) {
    if (n < 1) throw std::invalid_argument("chi_y vector needs n >= 1");
    return multiplicative_sequence_term(specialize_y(chi_y_characteristic_series(n), y0), n);
}

inline ChernVector todd_vector(int n) {
    if (n < 1) throw std::invalid_argument("Todd vector needs n >= 1");
    return multiplicative_sequence_term(todd_series(n), n);
}

/// L_m, a vector of C_{2m}.
inline ChernVector l_genus_vector(int m) {
    if (m < 1) throw std::invalid_argument("L-genus needs m >= 1");
    return multiplicative_sequence_term(l_series(2 * m), 2 * m);
}

inline SubspaceQ subspace_C(int n) { return SubspaceQ::full(partition_count(n)); }

/// Generating set of EP_{2m}: the Euler number followed by p_mu for mu of m.
inline std::vector<ChernVector> ep_generators(int m) {
    if (m < 1) throw std::invalid_argument("EP needs m >= 1");
    std::vector<ChernVector> gens{euler_vector(2 * m)};
    for (const auto& mu : enumerate_partitions(m)) gens.push_back(pontryagin_monomial_vector(mu, 2 * m));
    return gens;
}

inline SubspaceQ subspace_EP(int m) { return span(ep_generators(m), 2 * m); }

/// Span of a precomputed T^p list (lets callers supply altered vectors).
inline SubspaceQ subspace_HT(const std::vector<ChernVector>& tp, int n) { return span(tp, n); }
inline SubspaceQ subspace_HT(int n) { return subspace_HT(tp_vectors(n), n); }

/// Span of the chi_p, which coincide with the T^p.
inline SubspaceQ subspace_CHI(const std::vector<ChernVector>& tp, int n) { return span(tp, n); }
inline SubspaceQ subspace_CHI(int n) { return subspace_CHI(tp_vectors(n), n); }

}  // namespace chernum
