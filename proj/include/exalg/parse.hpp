#pragma once

// Expression grammar and the canonical printer. The printer's output
// re-parses to the same value, and formatting is idempotent.
//
//   expr      := term (("+" | "-") term)*
//   term      := factor ("^" factor)*
//   factor    := scalar "*" factor | scalar | generator | "(" expr ")"
//   generator := "e" digits
//   scalar    := int ("/" posint)?
//
// "^" is the wedge; "*" binds tightest; whitespace is insignificant.

#include <cctype>
#include <stdexcept>
#include <string>

#include "multivector.hpp"

namespace exalg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class Parser {
public:
    Parser(const std::string& input, AlgebraSignature sig) : in_(input), sig_(sig) {}

    Multivector run() {
        Multivector v = expr();
        skip_ws();
        if (pos_ != in_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    const std::string& in_;
    AlgebraSignature sig_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < in_.size() ? in_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    Multivector expr() {
        Multivector v = term();
        while (true) {
            char op = peek();
            if (op != '+' && op != '-') break;
            ++pos_;
            Multivector t = term();
            v = op == '+' ? v + t : v - t;
        }
        return v;
    }

    Multivector term() {
        Multivector v = factor();
        while (consume('^')) v = v.wedge(factor());
        return v;
    }

    Multivector factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Multivector v = expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == 'e') return generator();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            Scalar s = scalar();
            if (consume('*')) return factor() * s;
            return Multivector::scalar(sig_, s);
        }
        throw ParseError("expected scalar, generator, or '('", pos_);
    }

    Multivector generator() {
        std::size_t start = pos_;
        ++pos_;  // 'e'
        std::string d = digits("generator index");
        long idx = d.size() <= 4 ? std::stol(d) : -1;
        if (idx < 1 || idx > sig_.n)
            throw ParseError("generator index e" + d + " out of range [1, " + std::to_string(sig_.n) + "]", start);
        return Multivector::generator(sig_, static_cast<int>(idx));
    }

    Scalar scalar() {
        bool negative = consume('-');
        BigInt num(digits("integer"));
        if (negative) num = -num;
        if (consume('/')) {
            BigInt den(digits("positive integer"));
            if (den == 0) throw ParseError("zero denominator", pos_);
            return Scalar::from_fraction(num, den, sig_.field);
        }
        return Scalar::from_integer(num, sig_.field);
    }

    std::string digits(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected " + what, pos_);
        return in_.substr(start, pos_ - start);
    }
};

}  // namespace detail

inline Multivector parse_expr(const std::string& input, AlgebraSignature sig) {
    return detail::Parser(input, sig).run();
}

// Terms in grade-major then lexicographic order; unit term as a bare
// scalar, every other term as "coeff*e_i^...^e_j"; zero prints "0".
inline std::string format_canonical(const Multivector& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [b, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        if (b.is_unit())
            out += c.str();
        else
            out += c.str() + "*" + b.str();
    }
    return out;
}

}  // namespace exalg
