#include "svol/poly_parse.hpp"

#include <cctype>

namespace svol {
namespace {

class Parser {
  public:
    Parser(const std::string& text, VarTablePtr table, int cap)
        : text_(text), table_(std::move(table)), cap_(cap) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw parse_error("polynomial syntax error: " + msg, line, col);
    }

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

    Poly expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Poly factor() {
        Poly p = base();
        if (eat('^')) {
            long e = parse_uint("exponent");
            Poly r = Poly::constant(table_, cap_, 1);
            for (long i = 0; i < e; ++i) r = r * p;
            return r;
        }
        return p;
    }

    Poly base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num(parse_bigint());
            if (eat('/')) {
                boost::multiprecision::cpp_int den = parse_bigint();
                if (den == 0) fail("zero denominator");
                num /= den;
            }
            return Poly::constant(table_, cap_, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            int v = table_->find_var(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return Poly::variable(table_, cap_, v);
        }
        fail("expected number, variable, or '('");
    }

    boost::multiprecision::cpp_int parse_bigint() {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) fail("expected integer");
        return boost::multiprecision::cpp_int(digits);
    }

    long parse_uint(const char* what) {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty() || digits.size() > 4) fail(std::string("expected small ") + what);
        return std::stol(digits);
    }

    const std::string& text_;
    VarTablePtr table_;
    int cap_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarTablePtr& table, int degree_cap) {
    return Parser(text, table, degree_cap).parse();
}

}  // namespace svol
