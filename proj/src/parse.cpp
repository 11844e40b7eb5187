#include "qlie/parse.hpp"

#include <cctype>

namespace qlie {

namespace {

class Parser {
public:
    Parser(const std::string& text, int n, UnitMode mode) : text_(text), n_(n), mode_(mode) {}

    FreeElt parse() {
        FreeElt out = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    const std::string& text_;
    int n_;
    UnitMode mode_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    FreeElt parse_expr() {
        FreeElt out;
        bool negative = eat('-');
        out += signed_term(negative);
        while (true) {
            skip_ws();
            if (eat('+'))
                out += signed_term(false);
            else if (eat('-'))
                out += signed_term(true);
            else
                break;
        }
        return out;
    }

    FreeElt signed_term(bool negative) {
        FreeElt t = parse_term();
        return negative ? -t : t;
    }

    // A term is a '*'-joined product of scalar atoms, generators, and `1`.
    FreeElt parse_term() {
        QScalar coeff = QScalar::one();
        Word word;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == 'e') {
                word.factors.push_back(parse_gen());
            } else if (c == 'q') {
                coeff *= parse_q_power();
            } else if (c == '(') {
                coeff *= parse_paren_scalar();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos_;
                Int v = parse_integer();
                if (v == 1 && mode_ == UnitMode::Marker && pos_ == start + 1)
                    word.factors.push_back(Gen::unit_marker());
                else
                    coeff *= QScalar(v);
            } else {
                fail(saw_factor ? "expected factor after '*'" : "expected term");
            }
            saw_factor = true;
            if (!eat('*')) break;
        }
        return FreeElt(word, coeff);
    }

    Gen parse_gen() {
        size_t at = pos_;
        if (!eat('e') || !eat('(')) fail("expected generator 'e(i,j)'");
        Int iv = parse_integer();
        if (!eat(',')) fail("expected ',' in generator");
        Int jv = parse_integer();
        if (!eat(')')) fail("expected ')' in generator");
        if (iv < 1 || jv > n_ + 1 || iv >= jv) {
            pos_ = at;
            fail("invalid generator e(" + iv.str() + "," + jv.str() + "): requires 1 <= i < j <= " +
                 std::to_string(n_ + 1));
        }
        return Gen{static_cast<int>(iv), static_cast<int>(jv)};
    }

    QScalar parse_q_power() {
        if (!eat('q')) fail("expected 'q'");
        int exp = 1;
        if (eat('^')) exp = parse_small_signed();
        return QScalar::q_pow(exp);
    }

    Int parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Int(text_.substr(start, pos_ - start));
    }

    int parse_small_signed() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        Int v = parse_integer();
        if (v > 1 << 20) fail("exponent too large");
        int r = static_cast<int>(v);
        return neg ? -r : r;
    }

    // Parenthesized scalar expression over integers and q-powers; no
    // generators are permitted inside.
    QScalar parse_paren_scalar() {
        if (!eat('(')) fail("expected '('");
        QScalar out;
        bool negative = eat('-');
        out += negative ? -parse_scalar_product() : parse_scalar_product();
        while (true) {
            if (eat('+'))
                out += parse_scalar_product();
            else if (eat('-'))
                out -= parse_scalar_product();
            else
                break;
        }
        if (!eat(')')) fail("expected ')'");
        return out;
    }

    QScalar parse_scalar_product() {
        QScalar out = parse_scalar_atom();
        while (eat('*')) out *= parse_scalar_atom();
        return out;
    }

    QScalar parse_scalar_atom() {
        char c = peek();
        if (c == 'q') return parse_q_power();
        if (c == '(') return parse_paren_scalar();
        if (std::isdigit(static_cast<unsigned char>(c))) return QScalar(parse_integer());
        fail("expected scalar");
    }
};

}  // namespace

FreeElt parse_element(const std::string& text, int n, UnitMode mode) {
    return Parser(text, n, mode).parse();
}

}  // namespace qlie
