#include "reeskit/parse.hpp"

#include <cctype>

namespace reeskit {
namespace {

class parser {
public:
    parser(const std::string& text, const ring_spec& ring) : s_(text), ring_(ring) {}

    polynomial run() {
        polynomial p = expr();
        skip_ws();
        if (pos_ < s_.size())
            throw parse_error(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    const std::string& s_;
    const ring_spec& ring_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    polynomial expr() {
        // leading sign allowed
        char sign = '+';
        if (peek() == '+' || peek() == '-') sign = s_[pos_++];
        polynomial acc = product();
        if (sign == '-') acc = -acc;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            polynomial rhs = product();
            acc = c == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    bool starts_factor(char c) const {
        return c == '(' || c == 'x' || c == 'T' || std::isdigit(static_cast<unsigned char>(c));
    }

    polynomial product() {
        polynomial acc = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (starts_factor(c)) {  // juxtaposition: "2x1", "x1x2"
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    polynomial power() {
        polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned long e = read_nat("exponent");
            if (e > 0xffff) throw parse_error("exponent too large", pos_);
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    polynomial atom() {
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_++;
            polynomial p = expr();
            if (peek() != ')') throw parse_error("unbalanced '('", open);
            ++pos_;
            return p;
        }
        if (c == 'x' || c == 'T') return variable();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == '/')
            throw parse_error("unsupported operator '/': division is only allowed inside "
                              "an integer coefficient like 3/4", pos_);
        if (c == '\0') throw parse_error("unexpected end of input", pos_);
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    polynomial variable() {
        std::size_t start = pos_;
        char kind = s_[pos_++];
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error(std::string("expected an index after '") + kind + "'", start);
        unsigned long idx = read_nat("variable index");
        int limit = kind == 'x' ? ring_.x_count : ring_.t_count;
        if (idx < 1 || static_cast<long>(idx) > limit)
            throw parse_error("unknown variable " + std::string(1, kind) + std::to_string(idx) +
                              " in a ring with " + std::to_string(limit) + " " + kind +
                              "-variables", start);
        int v = kind == 'x' ? ring_.x_var(static_cast<int>(idx))
                            : ring_.t_var(static_cast<int>(idx));
        return polynomial::variable(ring_, v);
    }

    polynomial number() {
        std::string num = read_digits();
        std::string den = "1";
        // '/' binds only here, to form a rational literal
        if (pos_ < s_.size() && s_[pos_] == '/') {
            std::size_t slash = pos_++;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error("expected digits after '/'", slash);
            den = read_digits();
            if (den.find_first_not_of('0') == std::string::npos)
                throw parse_error("zero denominator", slash);
        }
        return polynomial::constant(ring_, coeff::from_decimal(num, den, ring_.field));
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            out += s_[pos_++];
        return out;
    }

    unsigned long read_nat(const char* what) {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error(std::string("expected ") + what, pos_);
        std::string d = read_digits();
        if (d.size() > 9) throw parse_error(std::string(what) + " out of range", pos_);
        return std::stoul(d);
    }
};

}  // namespace

polynomial parse_polynomial(const std::string& text, const ring_spec& ring) {
    return parser(text, ring).run();
}

}  // namespace reeskit
