#pragma once

// Sparse multivectors over a fixed signature (n, field) and the wedge
// product. The term map never stores a zero coefficient, so equality of
// values is equality of maps.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blade.hpp"
#include "field.hpp"

namespace exalg {

struct AlgebraSignature {
    int n = 0;
    FieldSpec field;

    AlgebraSignature() = default;
    AlgebraSignature(int n_, FieldSpec f) : n(n_), field(f) {
        if (n < 1 || n > kMaxGenerators)
            throw std::invalid_argument("generator count must be in [1, " + std::to_string(kMaxGenerators) + "]");
    }

    bool operator==(const AlgebraSignature& o) const { return n == o.n && field == o.field; }
    bool operator!=(const AlgebraSignature& o) const { return !(*this == o); }

    void require_same(const AlgebraSignature& o) const {
        if (*this != o) throw std::invalid_argument("algebra signature mismatch");
    }
    void require_enumerable() const {
        if (n > kMaxEnumeration)
            throw std::invalid_argument("n = " + std::to_string(n) + " exceeds enumeration limit " + std::to_string(kMaxEnumeration));
    }
};

class Multivector {
public:
    using TermMap = std::map<Blade, Scalar, BladeOrder>;

    explicit Multivector(AlgebraSignature sig) : sig_(sig) {}

    static Multivector zero(AlgebraSignature sig) { return Multivector(sig); }
    static Multivector unit(AlgebraSignature sig) { return term(sig, Blade::unit(), Scalar::one(sig.field)); }
    static Multivector generator(AlgebraSignature sig, int i) {
        return term(sig, Blade::from_indices({i}, sig.n), Scalar::one(sig.field));
    }
    static Multivector scalar(AlgebraSignature sig, const Scalar& c) { return term(sig, Blade::unit(), c); }

    static Multivector term(AlgebraSignature sig, Blade b, const Scalar& c) {
        Multivector m(sig);
        m.add_term(b, c);
        return m;
    }

    const AlgebraSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Scalar::zero(sig_.field) : it->second;
    }

    void add_term(Blade b, const Scalar& c) {
        if (c.field() != sig_.field) throw std::invalid_argument("coefficient field mismatch");
        if ((b.mask() >> sig_.n) != 0) throw std::out_of_range("blade index exceeds signature dimension");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(b, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Multivector operator+(const Multivector& o) const {
        sig_.require_same(o.sig_);
        Multivector r = *this;
        for (const auto& [b, c] : o.terms_) r.add_term(b, c);
        return r;
    }

    Multivector operator-(const Multivector& o) const {
        sig_.require_same(o.sig_);
        Multivector r = *this;
        for (const auto& [b, c] : o.terms_) r.add_term(b, -c);
        return r;
    }

    Multivector operator*(const Scalar& c) const {
        Multivector r(sig_);
        for (const auto& [b, coeff] : terms_) r.add_term(b, coeff * c);
        return r;
    }

    Multivector operator-() const { return *this * (-Scalar::one(sig_.field)); }

    // x + c*y
    Multivector add_scale(const Multivector& y, const Scalar& c) const { return *this + y * c; }

    Multivector wedge(const Multivector& o) const {
        sig_.require_same(o.sig_);
        Multivector r(sig_);
        for (const auto& [bu, cu] : terms_) {
            for (const auto& [bv, cv] : o.terms_) {
                WedgeSign ws = blade_wedge_sign(bu, bv);
                if (ws.sign == 0) continue;
                Scalar c = cu * cv;
                if (ws.sign < 0) c = -c;
                r.add_term(ws.result, c);
            }
        }
        return r;
    }

    Multivector grade_project(int k) const {
        if (k < 0 || k > sig_.n) throw std::out_of_range("grade out of range");
        Multivector r(sig_);
        for (const auto& [b, c] : terms_)
            if (b.grade() == k) r.add_term(b, c);
        return r;
    }

    Multivector even_part() const { return parity_part(0); }
    Multivector odd_part() const { return parity_part(1); }
    Multivector top_part() const { return grade_project(sig_.n); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int g = terms_.begin()->first.grade();
        for (const auto& [b, c] : terms_)
            if (b.grade() != g) return false;
        return true;
    }

    // Minimal grade with a nonzero component; nullopt for the zero
    // multivector (the filtration bottom).
    std::optional<int> filtration_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.grade();  // grade-major order
    }

    bool operator==(const Multivector& o) const { return sig_ == o.sig_ && terms_ == o.terms_; }
    bool operator!=(const Multivector& o) const { return !(*this == o); }

private:
    AlgebraSignature sig_;
    TermMap terms_;

    Multivector parity_part(int parity) const {
        Multivector r(sig_);
        for (const auto& [b, c] : terms_)
            if (b.grade() % 2 == parity) r.add_term(b, c);
        return r;
    }
};

inline Multivector wedge(const Multivector& x, const Multivector& y) { return x.wedge(y); }

// All C(n, k) grade-k blades, in lexicographic order.
inline std::vector<Blade> basis_enumerate(const AlgebraSignature& sig, int k) {
    sig.require_enumerable();
    if (k < 0 || k > sig.n) throw std::out_of_range("grade out of range");
    std::vector<Blade> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back(Blade::from_indices(idx, sig.n));
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && idx[i] == sig.n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline std::vector<Blade> basis_all(const AlgebraSignature& sig) {
    sig.require_enumerable();
    std::vector<Blade> out;
    for (int k = 0; k <= sig.n; ++k)
        for (Blade b : basis_enumerate(sig, k)) out.push_back(b);
    return out;
}

}  // namespace exalg
