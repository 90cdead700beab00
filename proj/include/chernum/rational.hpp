#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and polynomials in y.

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace chernum {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Canonical "a/b" form, lowest terms, positive denominator ("3", "-7/45").
/// Lowest terms even if x was built from an unreduced numerator/denominator pair.
inline std::string to_string(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

/// Parses "a", "-a" or "a/b". Rejects zero denominators and anything else.
inline Rational parse_rational(const std::string& text) {
    static const std::regex grammar(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
    if (!std::regex_match(text, grammar))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    std::string body = text.front() == '+' ? text.substr(1) : text;
    const auto slash = body.find('/');
    if (slash != std::string::npos && Integer(body.substr(slash + 1)) == 0)
        throw std::invalid_argument("zero denominator in rational: '" + text + "'");
    Rational r(body);
    r.canonicalize();
    return r;
}

/// Polynomial in one variable y with exact rational coefficients.
/// Index i of coeffs() is the coefficient of y^i; trailing zeros are trimmed.
class YPolynomial {
public:
    YPolynomial() = default;
    YPolynomial(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT: implicit scalar embedding
    YPolynomial(long c) : YPolynomial(Rational(c)) {}          // NOLINT
    explicit YPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static YPolynomial y() { return YPolynomial(std::vector<Rational>{0, 1}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Rational(0);
    }

    Rational evaluate(const Rational& y0) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y0 + *it;
        return acc;
    }

    YPolynomial& operator+=(const YPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    YPolynomial& operator-=(const YPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    YPolynomial& operator*=(const YPolynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator-(YPolynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return YPolynomial(std::move(out));
    }
    friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline bool is_zero(const YPolynomial& p) { return p.is_zero(); }

inline std::ostream& operator<<(std::ostream& os, const YPolynomial& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << to_string(p.coeffs()[i]);
    return os << ']';
}

/// Scales a ring element by an exact rational.
inline Rational scale(const Rational& x, const Rational& s) { return x * s; }
inline YPolynomial scale(const YPolynomial& x, const Rational& s) {
    if (sgn(s) == 0) return {};
    std::vector<Rational> c = x.coeffs();
    for (auto& v : c) v *= s;
    return YPolynomial(std::move(c));
}

/// Coefficient rings the series and reduction kernels run over.
template <typename C>
concept CoefficientRing = requires(C a, const C& b, const Rational& s) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { is_zero(b) } -> std::convertible_to<bool>;
    { scale(b, s) } -> std::convertible_to<C>;
    C(Rational(1));
};

}  // namespace chernum
