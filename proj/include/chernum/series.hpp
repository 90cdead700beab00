#pragma once

// Truncated power series in one weight variable x over a coefficient ring,
// and the chi_y characteristic series Q(y;x) = x + x(y+1)/(e^{x(y+1)} - 1).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace chernum {

/// Series c_0 + c_1 x + ... + c_N x^N; all arithmetic discards x-degree > N.
template <CoefficientRing C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(checked(order)) + 1, C(Rational(0))) {}
    TruncatedSeries(int order, std::vector<C> coeffs) : TruncatedSeries(order) {
        for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
    }

    /// The series "x" (or 0 when order is 0).
    static TruncatedSeries variable(int order) {
        TruncatedSeries s(order);
        if (order >= 1) s.coeffs_[1] = C(Rational(1));
        return s;
    }
    static TruncatedSeries constant(int order, const C& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& operator[](std::size_t k) const { return coeffs_.at(k); }
    C& operator[](std::size_t k) { return coeffs_.at(k); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries(a.order()) - a; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.same_order(b);
        const std::size_t len = a.coeffs_.size();
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i < len; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < len; ++j)
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    TruncatedSeries scaled(const Rational& s) const {
        TruncatedSeries out(order());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = scale(coeffs_[i], s);
        return out;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static int checked(int order) {
        if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
        return order;
    }
    void same_order(const TruncatedSeries& o) const {
        if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("truncation orders differ");
    }

    std::vector<C> coeffs_;
};

/// sum_k u^k / k!, truncated.
template <CoefficientRing C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& u) {
    if (!is_zero(u[0])) throw std::invalid_argument("exp requires zero constant term");
    const int n = u.order();
    auto result = TruncatedSeries<C>::constant(n, C(Rational(1)));
    auto power = result;
    Rational inv_factorial = 1;
    for (int k = 1; k <= n; ++k) {
        power = power * u;
        inv_factorial /= k;
        result += power.scaled(inv_factorial);
    }
    return result;
}

/// Reciprocal of a series with constant term exactly 1.
template <CoefficientRing C>
TruncatedSeries<C> series_inverse(const TruncatedSeries<C>& s) {
    const C one(Rational(1));
    if (!(s[0] == one)) throw std::invalid_argument("inverse requires unit constant term");
    const int n = s.order();
    TruncatedSeries<C> t(n);
    t[0] = one;
    for (int k = 1; k <= n; ++k) {
        C acc(Rational(0));
        for (int j = 1; j <= k; ++j) acc = acc + s[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(k - j)];
        t[static_cast<std::size_t>(k)] = C(Rational(0)) - acc;
    }
    return t;
}

/// (e^u - 1)/u for u = a*x, built from 1/(k+1)! coefficients.
template <CoefficientRing C>
TruncatedSeries<C> exp_quotient_series(const C& a, int order) {
    TruncatedSeries<C> s(order);
    C power(Rational(1));
    Rational inv_factorial = 1;
    for (int k = 0; k <= order; ++k) {
        inv_factorial /= (k + 1);
        s[static_cast<std::size_t>(k)] = scale(power, inv_factorial);
        power = power * a;
    }
    return s;
}

/// Q(y;x) = x + x(y+1)/(e^{x(y+1)} - 1) with y kept symbolic.
inline TruncatedSeries<YPolynomial> chi_y_characteristic_series(int order) {
    const YPolynomial y_plus_one = YPolynomial::y() + YPolynomial(1);
    auto q = series_inverse(exp_quotient_series(y_plus_one, order));
    q += TruncatedSeries<YPolynomial>::variable(order);
    return q;
}

/// Evaluates every y-coefficient at y = y0.
inline TruncatedSeries<Rational> specialize_y(const TruncatedSeries<YPolynomial>& s, const Rational& y0) {
    TruncatedSeries<Rational> out(s.order());
    for (int k = 0; k <= s.order(); ++k)
        out[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k)].evaluate(y0);
    return out;
}

/// Todd series x/(1 - e^{-x}), the y = 0 specialization.
inline TruncatedSeries<Rational> todd_series(int order) {
    return specialize_y(chi_y_characteristic_series(order), 0);
}

/// x coth x, the y = 1 specialization.
inline TruncatedSeries<Rational> l_series(int order) {
    return specialize_y(chi_y_characteristic_series(order), 1);
}

}  // namespace chernum
