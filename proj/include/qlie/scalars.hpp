#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>

namespace qlie {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in q with integer coefficients, kept in canonical form:
/// no zero coefficient is ever stored, so equality is representation equality.
class QScalar {
public:
    QScalar() = default;
    QScalar(int v) { if (v != 0) coeffs_[0] = v; }
    QScalar(const Int& v) { if (v != 0) coeffs_[0] = v; }

    static QScalar q_pow(int exponent, Int coeff = 1) {
        QScalar s;
        if (coeff != 0) s.coeffs_[exponent] = std::move(coeff);
        return s;
    }
    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    // Single term c*q^k.
    bool is_monomial() const { return coeffs_.size() == 1; }
    // Unit of the Laurent ring: +-q^k.
    bool is_unit() const;
    QScalar unit_inverse() const;

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

    friend bool operator==(const QScalar& a, const QScalar& b) = default;
    // Arbitrary strict total order so QScalar can key containers.
    friend bool operator<(const QScalar& a, const QScalar& b) { return a.coeffs_ < b.coeffs_; }

    // Exact quotient; throws std::domain_error when the division is not exact.
    friend QScalar exact_div(const QScalar& num, const QScalar& den);

    const std::map<int, Int>& coeffs() const { return coeffs_; }
    int min_exp() const;
    int max_exp() const;
    // Sign of the highest-exponent coefficient; 0 for the zero scalar.
    int leading_sign() const;

    std::string str() const;

private:
    std::map<int, Int> coeffs_;  // exponent -> nonzero coefficient
};

/// Polynomial in the spectral-parameter symbol with QScalar coefficients.
/// Exponents are nonnegative; degree-0 embeds QScalar.
class LScalar {
public:
    LScalar() = default;
    LScalar(QScalar constant) {
        if (!constant.is_zero()) coeffs_[0] = std::move(constant);
    }
    LScalar(int v) : LScalar(QScalar(v)) {}

    static LScalar lambda_pow(int exponent, QScalar coeff = QScalar::one()) {
        if (exponent < 0) throw std::invalid_argument("lambda exponent must be nonnegative");
        LScalar s;
        if (!coeff.is_zero()) s.coeffs_[exponent] = std::move(coeff);
        return s;
    }
    static LScalar lambda() { return lambda_pow(1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one(); }

    LScalar operator-() const;
    LScalar& operator+=(const LScalar& o);
    LScalar& operator-=(const LScalar& o);
    friend LScalar operator+(LScalar a, const LScalar& b) { return a += b; }
    friend LScalar operator-(LScalar a, const LScalar& b) { return a -= b; }
    friend LScalar operator*(const LScalar& a, const LScalar& b);
    LScalar& operator*=(const LScalar& o) { return *this = *this * o; }

    friend bool operator==(const LScalar& a, const LScalar& b) = default;

    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    QScalar at_lambda_zero() const;
    const std::map<int, QScalar>& coeffs() const { return coeffs_; }

    std::string str() const;

private:
    std::map<int, QScalar> coeffs_;  // lambda exponent -> nonzero QScalar
};

}  // namespace qlie
