#pragma once

// Products of complex projective spaces CP^{k_1} x ... x CP^{k_r}.
//
// Cohomology model: Q[h_1..h_r]/(h_i^{k_i+1}), total Chern class
// prod_i (1+h_i)^{k_i+1}, fundamental class pairing <prod_i h_i^{k_i}> = 1.
// Hodge numbers of CP^k: h^{p,q} = 1 iff p = q <= k; products by Kunneth.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <utility>
#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chern_vector.hpp"
#include "partitions.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"

namespace chernum {

class ProductManifold {
public:
    /// Factor dimensions, any order; stored descending.
    explicit ProductManifold(std::vector<int> factors) : factors_(std::move(factors)) {
        for (int k : factors_)
            if (k < 1) throw std::invalid_argument("projective factor dimension must be >= 1");
        std::sort(factors_.begin(), factors_.end(), std::greater<>());
    }
    explicit ProductManifold(const Partition& p) : factors_(p.parts()) {}
    ProductManifold(std::initializer_list<int> factors) : ProductManifold(std::vector<int>(factors)) {}

    const std::vector<int>& factors() const { return factors_; }
    int dimension() const {
        int n = 0;
        for (int k : factors_) n += k;
        return n;
    }
    Partition as_partition() const { return Partition(factors_); }

    friend bool operator==(const ProductManifold&, const ProductManifold&) = default;

private:
    std::vector<int> factors_;
};

/// "P2xP1xP1".
inline std::string to_string(const ProductManifold& m) {
    std::string s;
    for (std::size_t i = 0; i < m.factors().size(); ++i) {
        if (i) s += 'x';
        s += "P" + std::to_string(m.factors()[i]);
    }
    return s;
}

/// Case-insensitive "P<k>(xP<k>)*", k >= 1; canonicalized descending.
inline ProductManifold parse_manifold(const std::string& text) {
    static const std::regex grammar("^P[0-9]+(xP[0-9]+)*$", std::regex::icase);
    if (!std::regex_match(text, grammar)) throw std::invalid_argument("malformed manifold expression: '" + text + "'");
    std::vector<int> factors;
    std::string digits;
    for (char ch : text + "x") {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
        } else if (ch == 'x' || ch == 'X') {
            if (digits.size() > 4) throw std::invalid_argument("projective factor too large: '" + text + "'");
            const int k = std::stoi(digits);
            if (k < 1) throw std::invalid_argument("projective factor dimension must be >= 1");
            factors.push_back(k);
            digits.clear();
        }
    }
    return ProductManifold(std::move(factors));
}

namespace detail {

/// Dense truncated polynomial in h_1..h_r with exponent caps k_i
/// (mixed-radix index), integer coefficients.
class CappedPoly {
public:
    explicit CappedPoly(const std::vector<int>& caps) : caps_(caps), stride_(caps.size()) {
        std::size_t size = 1;
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            stride_[i] = size;
            size *= static_cast<std::size_t>(caps_[i] + 1);
        }
        coeffs_.assign(size, 0);
        degree_.assign(size, 0);
        for (std::size_t idx = 0; idx < size; ++idx) {
            int d = 0;
            for (std::size_t i = 0; i < caps_.size(); ++i) d += exponent(idx, i);
            degree_[idx] = d;
        }
    }

    int exponent(std::size_t idx, std::size_t var) const {
        return static_cast<int>((idx / stride_[var]) % static_cast<std::size_t>(caps_[var] + 1));
    }
    std::size_t size() const { return coeffs_.size(); }
    Integer& operator[](std::size_t idx) { return coeffs_[idx]; }
    const Integer& operator[](std::size_t idx) const { return coeffs_[idx]; }
    int degree(std::size_t idx) const { return degree_[idx]; }
    /// Index of prod h_i^{k_i}.
    std::size_t top() const { return coeffs_.size() - 1; }

    CappedPoly operator*(const CappedPoly& o) const {
        CappedPoly out(caps_);
        const auto lhs = nonzero();
        const auto rhs = o.nonzero();
        for (std::size_t a : lhs) {
            for (std::size_t b : rhs) {
                std::size_t idx = 0;
                bool fits = true;
                for (std::size_t i = 0; i < caps_.size() && fits; ++i) {
                    const int e = exponent(a, i) + exponent(b, i);
                    if (e > caps_[i]) fits = false;
                    idx += static_cast<std::size_t>(e) * stride_[i];
                }
                if (fits) out.coeffs_[idx] += coeffs_[a] * o.coeffs_[b];
            }
        }
        return out;
    }

    /// Coefficient of the top class in this * o.
    Integer pair_top(const CappedPoly& o) const {
        Integer acc = 0;
        for (std::size_t a : nonzero()) acc += coeffs_[a] * o.coeffs_[top() - a];
        return acc;
    }

    std::vector<std::size_t> nonzero() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) out.push_back(i);
        return out;
    }

private:
    std::vector<int> caps_;
    std::vector<std::size_t> stride_;
    std::vector<Integer> coeffs_;
    std::vector<int> degree_;
};

/// c_0..c_n of the tangent bundle.
inline std::vector<CappedPoly> chern_classes(const ProductManifold& m) {
    const auto& caps = m.factors();
    CappedPoly total(caps);
    // (1+h_i)^{k_i+1} truncated at h_i^{k_i}: coefficient binom(k_i+1, e_i).
    for (std::size_t idx = 0; idx < total.size(); ++idx) {
        Integer c = 1;
        for (std::size_t i = 0; i < caps.size(); ++i) {
            Integer b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(caps[i] + 1),
                         static_cast<unsigned long>(total.exponent(idx, i)));
            c *= b;
        }
        total[idx] = c;
    }
    std::vector<CappedPoly> graded(static_cast<std::size_t>(m.dimension()) + 1, CappedPoly(caps));
    for (std::size_t idx = 0; idx < total.size(); ++idx)
        graded[static_cast<std::size_t>(total.degree(idx))][idx] = total[idx];
    return graded;
}

/// Chern numbers sharing partial products across partitions with a common prefix.
class ChernNumberTable {
public:
    explicit ChernNumberTable(const ProductManifold& m) : classes_(chern_classes(m)) {}

    Integer operator()(const Partition& p) {
        if (p.empty()) return classes_[0][classes_[0].top()];
        std::vector<int> head(p.parts().begin(), p.parts().end() - 1);
        return prefix(Partition(head)).pair_top(classes_[static_cast<std::size_t>(p.parts().back())]);
    }

private:
    const CappedPoly& prefix(const Partition& p) {
        auto it = cache_.find(p);
        if (it != cache_.end()) return it->second;
        if (p.empty()) return cache_.emplace(p, classes_[0]).first->second;
        std::vector<int> head(p.parts().begin(), p.parts().end() - 1);
        CappedPoly value = prefix(Partition(head)) * classes_[static_cast<std::size_t>(p.parts().back())];
        return cache_.emplace(p, std::move(value)).first->second;
    }

    std::vector<CappedPoly> classes_;
    std::map<Partition, CappedPoly> cache_;
};

/// Chern numbers peeled one factor at a time: c(CP^k x N) = c(CP^k) c(N), so
///   c_lambda(CP^k x N) = sum over a with sum a_t = k of
///                        prod_t binom(k+1, a_t) * c_{lambda - a}(N).
/// Parts of equal size are split together with multinomial weights.
class FactorwiseChernNumbers {
public:
    explicit FactorwiseChernNumbers(const ProductManifold& m) : factors_(m.factors()) {}

    Integer operator()(const Partition& p) { return eval(0, p); }

private:
    Integer eval(std::size_t first, const Partition& p) {
        if (first == factors_.size()) return p.empty() ? Integer(1) : Integer(0);
        auto key = std::make_pair(first, p);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int k = factors_[first];
        std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
        for (int v : p.parts()) {
            if (!groups.empty() && groups.back().first == v) ++groups.back().second;
            else groups.emplace_back(v, 1);
        }
        Integer total = 0;
        std::vector<int> rest;
        // Distributes each group's copies over the amounts a = 0..min(v, k)
        // absorbed by CP^k; weight = multinomial * prod binom(k+1, a).
        std::function<void(std::size_t, int, int, int, Integer)> split =
            [&](std::size_t g, int a, int copies_left, int budget, Integer weight) {
                if (g == groups.size()) {
                    if (budget == 0) total += weight * eval(first + 1, Partition(rest));
                    return;
                }
                const int v = groups[g].first;
                const int top = std::min(v, k);
                if (a == top) {
                    const int c = copies_left;
                    if (c * a > budget) return;
                    const std::size_t mark = rest.size();
                    for (int t = 0; t < c; ++t)
                        if (v - a > 0) rest.push_back(v - a);
                    Integer w = weight;
                    for (int t = 0; t < c; ++t) w *= binomial(k + 1, a);
                    split(g + 1, 0, g + 1 < groups.size() ? groups[g + 1].second : 0, budget - c * a, w);
                    rest.resize(mark);
                    return;
                }
                for (int c = 0; c <= copies_left && c * a <= budget; ++c) {
                    const std::size_t mark = rest.size();
                    for (int t = 0; t < c; ++t)
                        if (v - a > 0) rest.push_back(v - a);
                    Integer w = weight * binomial(copies_left, c);
                    for (int t = 0; t < c; ++t) w *= binomial(k + 1, a);
                    split(g, a + 1, copies_left - c, budget - c * a, w);
                    rest.resize(mark);
                }
            };
        split(0, 0, groups.empty() ? 0 : groups[0].second, k, Integer(1));
        memo_.emplace(std::move(key), total);
        return total;
    }

    static Integer binomial(int n, int r) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
        return b;
    }

    std::vector<int> factors_;
    std::map<std::pair<std::size_t, Partition>, Integer> memo_;
};

}  // namespace detail

/// <c_{p_1} ... c_{p_k}, [M]>, an integer.
inline Rational chern_number(const ProductManifold& m, const Partition& p) {
    if (p.weight() != m.dimension()) throw std::invalid_argument("degree mismatch");
    return Rational(detail::FactorwiseChernNumbers(m)(p));
}

/// Same number by expanding prod_i (1+h_i)^{k_i+1} in the truncated ring.
/// Exponential in the number of factors; used as a cross-check.
inline Rational chern_number_expanded(const ProductManifold& m, const Partition& p) {
    if (p.weight() != m.dimension()) throw std::invalid_argument("degree mismatch");
    return Rational(detail::ChernNumberTable(m)(p));
}

/// All Chern numbers of M in canonical basis order.
inline RowQ chern_row(const ProductManifold& m) {
    detail::FactorwiseChernNumbers table(m);
    RowQ row;
    for (const auto& p : enumerate_partitions(m.dimension())) row.emplace_back(table(p));
    return row;
}

inline Rational dot(const ChernVector& v, const RowQ& row) {
    const PartitionBasis basis(v.degree());
    if (row.size() != basis.size()) throw std::invalid_argument("degree mismatch");
    Rational acc = 0;
    for (const auto& [p, c] : v.terms()) acc += c * row[basis.index_of(p)];
    return acc;
}

/// Pairing of a Chern-number combination with M.
inline Rational evaluate(const ChernVector& v, const ProductManifold& m) {
    if (v.degree() != m.dimension()) throw std::invalid_argument("degree mismatch");
    return dot(v, chern_row(m));
}

class HodgeDiamond {
public:
    explicit HodgeDiamond(int n)
        : n_(n), h_(static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(n + 1), 0)) {}

    int dimension() const { return n_; }
    long long operator()(int p, int q) const { return h_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)); }
    long long& at(int p, int q) { return h_.at(static_cast<std::size_t>(p)).at(static_cast<std::size_t>(q)); }

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

private:
    int n_;
    std::vector<std::vector<long long>> h_;
};

/// Kunneth product of the factors' Hodge polynomials sum_{i<=k} (st)^i.
inline HodgeDiamond hodge_diamond(const ProductManifold& m) {
    HodgeDiamond acc(0);
    acc.at(0, 0) = 1;
    for (int k : m.factors()) {
        HodgeDiamond factor(k);
        for (int i = 0; i <= k; ++i) factor.at(i, i) = 1;
        HodgeDiamond next(acc.dimension() + k);
        for (int p = 0; p <= acc.dimension(); ++p)
            for (int q = 0; q <= acc.dimension(); ++q) {
                if (acc(p, q) == 0) continue;
                for (int a = 0; a <= k; ++a)
                    for (int b = 0; b <= k; ++b) next.at(p + a, q + b) += acc(p, q) * factor(a, b);
            }
        acc = std::move(next);
    }
    return acc;
}

/// chi_p = sum_q (-1)^q h^{p,q}.
inline long long chi_p_oracle(const ProductManifold& m, int p) {
    const int n = m.dimension();
    if (p < 0 || p > n) throw std::invalid_argument("p out of range");
    const HodgeDiamond h = hodge_diamond(m);
    long long acc = 0;
    for (int q = 0; q <= n; ++q) acc += (q % 2 == 0 ? 1 : -1) * h(p, q);
    return acc;
}

/// Entry (i, j) = evaluate(vectors[j], family[i]).
inline MatrixQ evaluation_matrix(const std::vector<ProductManifold>& family, const std::vector<ChernVector>& vectors) {
    for (std::size_t j = 1; j < vectors.size(); ++j)
        if (vectors[j].degree() != vectors[0].degree()) throw std::invalid_argument("dimension mismatch");
    MatrixQ out(family.size(), vectors.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const RowQ row = chern_row(family[i]);
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (vectors[j].degree() != family[i].dimension()) throw std::invalid_argument("dimension mismatch");
            out(i, j) = dot(vectors[j], row);
        }
    }
    return out;
}

/// Every product of projective spaces of dimension n, one per partition.
inline std::vector<ProductManifold> projective_products(int n) {
    std::vector<ProductManifold> out;
    for (const auto& p : enumerate_partitions(n)) out.emplace_back(p);
    return out;
}

/// Products CP2^a x CP1^b with 2a + b = n, a descending.
inline std::vector<ProductManifold> cp1_cp2_products(int n) {
    std::vector<ProductManifold> out;
    for (int a = n / 2; a >= 0; --a) {
        std::vector<int> factors(static_cast<std::size_t>(a), 2);
        factors.insert(factors.end(), static_cast<std::size_t>(n - 2 * a), 1);
        out.emplace_back(std::move(factors));
    }
    return out;
}

}  // namespace chernum
