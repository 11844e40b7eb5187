#include "qlie/basis.hpp"

namespace qlie {

std::string Gen::str() const {
    if (is_unit_marker()) return "1";
    std::ostringstream os;
    os << "e(" << i << "," << j << ")";
    return os.str();
}

std::string Word::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < factors.size(); ++k) {
        if (k) os << "*";
        os << factors[k].str();
    }
    return os.str();
}

std::string render(const FreeElt& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        const int sign = c.leading_sign();
        const QScalar mag = sign < 0 ? -c : c;
        if (first) {
            if (sign < 0) os << "-";
            first = false;
        } else {
            os << (sign < 0 ? " - " : " + ");
        }
        if (w.empty()) {
            if (mag.is_monomial())
                os << mag.str();
            else
                os << "(" << mag.str() << ")";
            continue;
        }
        if (!mag.is_one()) {
            if (mag.is_monomial())
                os << mag.str() << "*";
            else
                os << "(" << mag.str() << ")*";
        }
        os << w.str();
    }
    return os.str();
}

std::string render(const LFreeElt& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        if (w.empty()) {
            os << "(" << c.str() << ")";
            continue;
        }
        if (!c.is_one()) os << "(" << c.str() << ")*";
        os << w.str();
    }
    return os.str();
}

}  // namespace qlie
