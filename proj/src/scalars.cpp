#include "qlie/scalars.hpp"

#include <sstream>

namespace qlie {

bool QScalar::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool QScalar::is_unit() const {
    if (!is_monomial()) return false;
    const Int& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
}

QScalar QScalar::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("QScalar::unit_inverse: not a unit: " + str());
    auto [exp, c] = *coeffs_.begin();
    return q_pow(-exp, c);
}

QScalar QScalar::operator-() const {
    QScalar r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            Int& slot = r.coeffs_[ea + eb];
            slot += ca * cb;
            if (slot == 0) r.coeffs_.erase(ea + eb);
        }
    return r;
}

int QScalar::min_exp() const {
    if (coeffs_.empty()) throw std::domain_error("min_exp of zero");
    return coeffs_.begin()->first;
}

int QScalar::max_exp() const {
    if (coeffs_.empty()) throw std::domain_error("max_exp of zero");
    return coeffs_.rbegin()->first;
}

int QScalar::leading_sign() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.rbegin()->second > 0 ? 1 : -1;
}

namespace {
QScalar shifted(const QScalar& s, int delta) {
    QScalar r;
    for (const auto& [e, c] : s.coeffs()) r += QScalar::q_pow(e + delta, c);
    return r;
}
}  // namespace

QScalar exact_div(const QScalar& num, const QScalar& den) {
    if (den.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (num.is_zero()) return QScalar::zero();
    // Shift both operands to ordinary polynomials, long-divide, shift back.
    const int nmin = num.min_exp();
    const int dmin = den.min_exp();
    QScalar rem = shifted(num, -nmin);
    const QScalar d = shifted(den, -dmin);
    const int d_top = d.max_exp();
    const Int& d_lead = d.coeffs().rbegin()->second;
    QScalar quot;
    while (!rem.is_zero() && rem.max_exp() >= d_top) {
        const Int& lead = rem.coeffs().rbegin()->second;
        Int q, r;
        boost::multiprecision::divide_qr(lead, d_lead, q, r);
        if (r != 0) throw std::domain_error("exact_div: not divisible");
        QScalar t = QScalar::q_pow(rem.max_exp() - d_top, q);
        quot += t;
        rem -= t * d;
    }
    if (!rem.is_zero()) throw std::domain_error("exact_div: not divisible");
    return shifted(quot, nmin - dmin);
}

std::string QScalar::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << abs_c;
        } else {
            if (abs_c != 1) os << abs_c << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LScalar LScalar::operator-() const {
    LScalar r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LScalar& LScalar::operator+=(const LScalar& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LScalar& LScalar::operator-=(const LScalar& o) {
    for (const auto& [e, c] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LScalar operator*(const LScalar& a, const LScalar& b) {
    LScalar r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) {
            QScalar& slot = r.coeffs_[ea + eb];
            slot += ca * cb;
            if (slot.is_zero()) r.coeffs_.erase(ea + eb);
        }
    return r;
}

QScalar LScalar::at_lambda_zero() const {
    auto it = coeffs_.find(0);
    return it == coeffs_.end() ? QScalar::zero() : it->second;
}

std::string LScalar::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        const bool composite = c.coeffs().size() > 1;
        if (e == 0) {
            os << (composite ? "(" + c.str() + ")" : c.str());
        } else {
            if (c.is_one()) {
                // bare power
            } else if (composite) {
                os << "(" << c.str() << ")*";
            } else {
                os << c.str() << "*";
            }
            os << "lambda";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace qlie
