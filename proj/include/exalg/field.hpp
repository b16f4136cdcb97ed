#pragma once

// Exact scalars over Q or a prime field F_p. Every value is kept in a
// unique canonical form: rationals fully reduced with positive
// denominator, residues in [0, p).

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace exalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime_field };

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0;  // modulus, prime_field only

    static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
    static FieldSpec prime(std::uint64_t p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        return {FieldKind::prime_field, p};
    }

    std::uint64_t characteristic() const { return kind == FieldKind::rationals ? 0 : p; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string name() const {
        return kind == FieldKind::rationals ? "q" : "fp:" + std::to_string(p);
    }
};

// One element of the field named by its FieldSpec. Rationals are stored
// as a reduced cpp_rational; prime-field elements as the residue in the
// numerator with denominator 1.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldSpec f) : field_(f) {}

    static Scalar zero(FieldSpec f) { return Scalar(f); }
    static Scalar one(FieldSpec f) { return from_integer(1, f); }

    static Scalar from_integer(const BigInt& v, FieldSpec f) {
        Scalar s(f);
        s.v_ = f.kind == FieldKind::rationals ? BigRational(v) : BigRational(mod(v, f.p));
        return s;
    }

    static Scalar from_fraction(const BigInt& num, const BigInt& den, FieldSpec f) {
        if (den == 0) throw std::domain_error("zero denominator");
        if (f.kind == FieldKind::rationals) {
            Scalar s(f);
            // cpp_rational reduces to lowest terms but insists on den > 0
            s.v_ = den < 0 ? BigRational(-num, -den) : BigRational(num, den);
            return s;
        }
        return from_integer(num, f) / from_integer(den, f);
    }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    const BigRational& value() const { return v_; }
    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    Scalar operator-() const {
        Scalar r(field_);
        if (field_.kind == FieldKind::rationals)
            r.v_ = -v_;
        else
            r.v_ = BigRational(mod(-numerator(), field_.p));
        return r;
    }

    Scalar operator+(const Scalar& o) const { return combine(o, v_ + o.v_); }
    Scalar operator-(const Scalar& o) const { return combine(o, v_ - o.v_); }
    Scalar operator*(const Scalar& o) const { return combine(o, v_ * o.v_); }

    Scalar operator/(const Scalar& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (field_.kind == FieldKind::rationals) return combine(o, v_ / o.v_);
        return *this * o.inverse();
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (field_.kind == FieldKind::rationals) {
            Scalar r(field_);
            r.v_ = 1 / v_;
            return r;
        }
        return from_integer(mod_inverse(numerator(), field_.p), field_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Literal syntax: integer, or integer "/" positive-integer.
    std::string str() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

private:
    FieldSpec field_;
    BigRational v_ = 0;

    Scalar combine(const Scalar& o, BigRational raw) const {
        if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
        Scalar r(field_);
        if (field_.kind == FieldKind::rationals) {
            r.v_ = std::move(raw);
        } else {
            // raw has denominator 1 for + - *
            r.v_ = BigRational(mod(boost::multiprecision::numerator(raw), field_.p));
        }
        return r;
    }

    static BigInt mod(BigInt v, std::uint64_t p) {
        BigInt m = v % p;
        if (m < 0) m += p;
        return m;
    }

    // extended Euclid
    static BigInt mod_inverse(BigInt a, std::uint64_t p) {
        BigInt t = 0, new_t = 1, r = p, new_r = mod(a, p);
        while (new_r != 0) {
            BigInt q = r / new_r;
            BigInt tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return mod(t, p);
    }
};

}  // namespace exalg
