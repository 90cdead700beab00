#pragma once

// Symmetric polynomials in Chern roots x_1..x_N, their reduction to the
// elementary symmetric basis e_1..e_N, and multiplicative sequences.
//
// Two representations are used. MultiSymmetricPoly stores every monomial by
// its exponent vector and is reduced by lex leading-term elimination. The
// monomial-symmetric form stores only the coefficient of m_lambda (one per
// sorted exponent vector) and runs the same elimination on that compressed
// data; it is what multiplicative_sequence_term uses at high degree.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chern_vector.hpp"
#include "partitions.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace chernum {

/// Polynomial in e_1, e_2, ...: key [2,1,1] is e2*e1*e1, [] the constant.
template <CoefficientRing C>
using ElementaryPoly = std::map<Partition, C, CanonicalOrder>;

/// Coefficients on the monomial symmetric functions m_lambda.
template <CoefficientRing C>
using MonomialSymmetricPoly = std::map<Partition, C, CanonicalOrder>;

using Exponents = std::vector<int>;

template <CoefficientRing C>
class MultiSymmetricPoly {
public:
    /// Lex-descending, so begin() is the leading term.
    using Terms = std::map<Exponents, C, std::greater<>>;

    explicit MultiSymmetricPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }

    static MultiSymmetricPoly constant(int nvars, const C& c) {
        MultiSymmetricPoly p(nvars);
        p.add(Exponents(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    /// e_j(x_1..x_N).
    static MultiSymmetricPoly elementary(int j, int nvars) {
        MultiSymmetricPoly p(nvars);
        if (j < 0 || j > nvars) return p;
        Exponents mask(static_cast<std::size_t>(nvars), 0);
        std::fill(mask.begin(), mask.begin() + j, 1);
        // Walk all 0/1 vectors with j ones.
        std::sort(mask.begin(), mask.end());
        do {
            p.add(mask, C(Rational(1)));
        } while (std::next_permutation(mask.begin(), mask.end()));
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Exponents& e, const C& c) {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector length mismatch");
        if (chernum::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (chernum::is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(Rational(0)) : it->second;
    }

    MultiSymmetricPoly& operator+=(const MultiSymmetricPoly& o) {
        same_arity(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    MultiSymmetricPoly& operator-=(const MultiSymmetricPoly& o) {
        same_arity(o);
        for (const auto& [e, c] : o.terms_) add(e, C(Rational(0)) - c);
        return *this;
    }

    /// Product, dropping monomials of total degree above max_degree (if >= 0).
    MultiSymmetricPoly multiply(const MultiSymmetricPoly& o, int max_degree = -1) const {
        same_arity(o);
        MultiSymmetricPoly out(nvars_);
        Exponents e(static_cast<std::size_t>(nvars_));
        for (const auto& [ea, ca] : terms_) {
            const int da = total(ea);
            for (const auto& [eb, cb] : o.terms_) {
                if (max_degree >= 0 && da + total(eb) > max_degree) continue;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add(e, ca * cb);
            }
        }
        return out;
    }
    friend MultiSymmetricPoly operator*(const MultiSymmetricPoly& a, const MultiSymmetricPoly& b) {
        return a.multiply(b);
    }

    /// Multiplies by q(x_var), dropping total degree above max_degree.
    MultiSymmetricPoly times_univariate(int var, const TruncatedSeries<C>& q, int max_degree) const {
        MultiSymmetricPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            const int d = total(e);
            for (int k = 0; k <= q.order() && d + k <= max_degree; ++k) {
                const C& qk = q[static_cast<std::size_t>(k)];
                if (chernum::is_zero(qk)) continue;
                Exponents f = e;
                f[static_cast<std::size_t>(var)] += k;
                out.add(f, c * qk);
            }
        }
        return out;
    }

    MultiSymmetricPoly homogeneous_part(int degree) const {
        MultiSymmetricPoly out(nvars_);
        for (const auto& [e, c] : terms_)
            if (total(e) == degree) out.terms_.emplace(e, c);
        return out;
    }

    /// Invariance under every adjacent transposition (which generate S_N).
    bool is_symmetric() const {
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i + 1 < e.size(); ++i) {
                if (e[i] == e[i + 1]) continue;
                Exponents f = e;
                std::swap(f[i], f[i + 1]);
                if (!(coeff(f) == c)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const MultiSymmetricPoly&, const MultiSymmetricPoly&) = default;

    static int total(const Exponents& e) {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }

private:
    void same_arity(const MultiSymmetricPoly& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    }

    int nvars_;
    Terms terms_;
};

/// Expands a polynomial in e_1..e_N into the N root variables.
template <CoefficientRing C>
MultiSymmetricPoly<C> expand_elementary(const ElementaryPoly<C>& poly, int nvars) {
    std::vector<MultiSymmetricPoly<C>> e;
    for (int j = 0; j <= nvars; ++j) e.push_back(MultiSymmetricPoly<C>::elementary(j, nvars));
    MultiSymmetricPoly<C> out(nvars);
    for (const auto& [p, c] : poly) {
        auto term = MultiSymmetricPoly<C>::constant(nvars, c);
        for (int part : p.parts()) {
            if (part > nvars) {
                term = MultiSymmetricPoly<C>(nvars);
                break;
            }
            term = term * e[static_cast<std::size_t>(part)];
        }
        out += term;
    }
    return out;
}

/// Writes a symmetric polynomial in terms of e_1..e_N by repeatedly
/// subtracting coeff * prod_j e_j^(a_j - a_{j+1}) for the lex-leading x^a.
template <CoefficientRing C>
ElementaryPoly<C> elementary_reduce(const MultiSymmetricPoly<C>& input) {
    const int nvars = input.nvars();
    std::vector<MultiSymmetricPoly<C>> e;
    for (int j = 0; j <= nvars; ++j) e.push_back(MultiSymmetricPoly<C>::elementary(j, nvars));

    ElementaryPoly<C> result;
    MultiSymmetricPoly<C> work = input;
    while (!work.is_zero()) {
        const auto [lead, c] = *work.terms().begin();
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
            throw std::invalid_argument("input not symmetric");

        std::vector<int> e_parts;
        for (int j = 1; j <= nvars; ++j) {
            const int next = j < nvars ? lead[static_cast<std::size_t>(j)] : 0;
            for (int r = 0; r < lead[static_cast<std::size_t>(j - 1)] - next; ++r) e_parts.push_back(j);
        }
        const Partition key(e_parts);
        auto term = MultiSymmetricPoly<C>::constant(nvars, c);
        for (int part : key.parts()) term = term * e[static_cast<std::size_t>(part)];
        work -= term;
        if (!work.is_zero() && work.terms().begin()->first == lead)
            throw std::invalid_argument("input not symmetric");

        auto [it, inserted] = result.try_emplace(key, c);
        if (!inserted) it->second = it->second + c;
    }
    return result;
}

namespace detail {

inline Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Coefficient of x^target in (poly * e_k), poly given on m_lambda. Distributes
/// the k decrements over blocks of equal positive exponents.
inline Integer times_elementary_coeff(const std::map<Partition, Integer, CanonicalOrder>& poly,
                                      const Partition& target, int k) {
    std::vector<std::pair<int, int>> blocks;  // (value, multiplicity)
    for (int v : target.parts()) {
        if (!blocks.empty() && blocks.back().first == v) ++blocks.back().second;
        else blocks.emplace_back(v, 1);
    }
    Integer total = 0;
    std::vector<int> take(blocks.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t b, int left) {
        if (b == blocks.size()) {
            if (left != 0) return;
            std::vector<int> parts;
            Integer ways = 1;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                const auto [v, r] = blocks[i];
                ways *= binomial(r, take[i]);
                for (int t = 0; t < r - take[i]; ++t) parts.push_back(v);
                if (v > 1)
                    for (int t = 0; t < take[i]; ++t) parts.push_back(v - 1);
            }
            auto it = poly.find(Partition(parts));
            if (it != poly.end()) total += ways * it->second;
            return;
        }
        const int r = blocks[b].second;
        for (int t = 0; t <= std::min(r, left); ++t) {
            take[b] = t;
            rec(b + 1, left - t);
        }
        take[b] = 0;
    };
    rec(0, k);
    return total;
}

}  // namespace detail

/// prod_j e_{index_j} in N variables, as coefficients of m_lambda.
inline std::map<Partition, Integer, CanonicalOrder> elementary_product_in_monomials(const Partition& index,
                                                                                   int nvars) {
    std::map<Partition, Integer, CanonicalOrder> poly{{Partition{}, Integer(1)}};
    int degree = 0;
    for (int k : index.parts()) {
        if (k > nvars) return {};
        degree += k;
        std::map<Partition, Integer, CanonicalOrder> next;
        for (const auto& target : enumerate_partitions(degree)) {
            if (static_cast<int>(target.length()) > nvars) continue;
            Integer c = detail::times_elementary_coeff(poly, target, k);
            if (c != 0) next.emplace(target, std::move(c));
        }
        poly = std::move(next);
    }
    return poly;
}

/// Elementary reduction on the m_lambda representation. The leading m_lambda
/// is eliminated by e_{lambda'} (conjugate), whose lex-leading monomial is x^lambda.
template <CoefficientRing C>
ElementaryPoly<C> elementary_reduce(MonomialSymmetricPoly<C> work, int nvars) {
    ElementaryPoly<C> result;
    for (auto it = work.begin(); it != work.end();) {
        if (is_zero(it->second)) it = work.erase(it);
        else ++it;
    }
    while (!work.empty()) {
        const auto [lead, c] = *work.begin();
        if (static_cast<int>(lead.length()) > nvars)
            throw std::invalid_argument("monomial needs more variables than available");
        const Partition key = lead.conjugate();
        for (const auto& [mu, count] : elementary_product_in_monomials(key, nvars)) {
            const C delta = scale(c, Rational(count));
            auto [pos, inserted] = work.try_emplace(mu, C(Rational(0)) - delta);
            if (!inserted) {
                pos->second = pos->second - delta;
                if (is_zero(pos->second)) work.erase(pos);
            }
        }
        if (!work.empty() && work.begin()->first == lead)
            throw std::logic_error("leading term did not cancel");
        result.emplace(key, c);
    }
    return result;
}

namespace detail {

template <CoefficientRing C>
void check_normalized(const TruncatedSeries<C>& q, int n) {
    if (n < 1) throw std::invalid_argument("multiplicative sequence degree must be positive");
    if (q.order() < n) throw std::invalid_argument("series truncated below requested degree");
    if (!(q[0] == C(Rational(1)))) throw std::invalid_argument("not a normalized characteristic series");
}

template <CoefficientRing C>
BasicChernVector<C> to_chern_vector(const ElementaryPoly<C>& poly, int n) {
    BasicChernVector<C> v(n);
    for (const auto& [p, c] : poly) v.add(p, c);
    return v;
}

}  // namespace detail

/// Degree-n term K_n(c_1..c_n) of the multiplicative sequence of q.
/// The coefficient of m_lambda in prod_i q(x_i) is prod_j q_{lambda_j}.
template <CoefficientRing C>
BasicChernVector<C> multiplicative_sequence_term(const TruncatedSeries<C>& q, int n) {
    detail::check_normalized(q, n);
    MonomialSymmetricPoly<C> sym;
    for (const auto& lambda : enumerate_partitions(n)) {
        C c(Rational(1));
        for (int part : lambda.parts()) c = c * q[static_cast<std::size_t>(part)];
        if (!is_zero(c)) sym.emplace(lambda, c);
    }
    return detail::to_chern_vector(elementary_reduce(std::move(sym), n), n);
}

/// Same result via the full product over n root variables. Cost grows like
/// binomial(2n, n); intended for cross-checking at small n.
template <CoefficientRing C>
BasicChernVector<C> multiplicative_sequence_term_expanded(const TruncatedSeries<C>& q, int n) {
    detail::check_normalized(q, n);
    auto product = MultiSymmetricPoly<C>::constant(n, C(Rational(1)));
    for (int i = 0; i < n; ++i) product = product.times_univariate(i, q, n);
    return detail::to_chern_vector(elementary_reduce(product.homogeneous_part(n)), n);
}

}  // namespace chernum
