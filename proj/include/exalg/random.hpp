#pragma once

// Seeded samplers for scalars, multivectors, matrices and automorphisms.
// Values are derived from the raw mt19937_64 stream (no distribution
// objects), so a seed pins the output bit-for-bit across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "matrix.hpp"
#include "morphism.hpp"
#include "multivector.hpp"

namespace exalg {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    std::uint64_t below(std::uint64_t m) { return m ? gen_() % m : 0; }
    int int_in(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 gen_;
};

inline Scalar random_scalar(Rng& rng, const FieldSpec& f) {
    if (f.kind == FieldKind::prime_field)
        return Scalar::from_integer(BigInt(rng.below(f.p)), f);
    return Scalar::from_fraction(rng.int_in(-4, 4), rng.int_in(1, 3), f);
}

inline Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& f) {
    while (true) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero()) return s;
    }
}

inline Multivector random_homogeneous(Rng& rng, const AlgebraSignature& sig, int grade) {
    std::vector<Blade> basis = basis_enumerate(sig, grade);
    Multivector out(sig);
    int terms = rng.int_in(1, 3);
    for (int t = 0; t < terms; ++t)
        out.add_term(basis[rng.below(basis.size())], random_scalar(rng, sig.field));
    return out;
}

inline Multivector random_multivector(Rng& rng, const AlgebraSignature& sig) {
    Multivector out(sig);
    int terms = rng.int_in(1, 5);
    for (int t = 0; t < terms; ++t) {
        int grade = rng.int_in(0, sig.n);
        std::vector<Blade> basis = basis_enumerate(sig, grade);
        out.add_term(basis[rng.below(basis.size())], random_scalar(rng, sig.field));
    }
    return out;
}

// random element of A_odd with every component grade >= min_grade
inline Multivector random_odd(Rng& rng, const AlgebraSignature& sig, int min_grade = 1) {
    Multivector out(sig);
    for (int grade = min_grade % 2 == 1 ? min_grade : min_grade + 1; grade <= sig.n; grade += 2) {
        std::vector<Blade> basis = basis_enumerate(sig, grade);
        int terms = rng.int_in(0, 2);
        for (int t = 0; t < terms; ++t)
            out.add_term(basis[rng.below(basis.size())], random_scalar(rng, sig.field));
    }
    return out;
}

inline SquareMatrix random_matrix(Rng& rng, int n, const FieldSpec& f) {
    SquareMatrix m(n, f);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i, j) = random_scalar(rng, f);
    return m;
}

inline SquareMatrix random_invertible(Rng& rng, int n, const FieldSpec& f) {
    while (true) {
        SquareMatrix m = random_matrix(rng, n, f);
        if (!m.det_gauss().is_zero()) return m;
    }
}

enum class AutProfile { linear, inner, unipotent, composite };

namespace detail {

inline Morphism sample_automorphism(Rng& rng, const AlgebraSignature& sig, AutProfile profile) {
    switch (profile) {
        case AutProfile::linear:
            return lift_linear(random_invertible(rng, sig.n, sig.field), sig);
        case AutProfile::inner:
            return exp_inner_derivation(random_odd(rng, sig, 1));
        case AutProfile::unipotent: {
            // e_i -> e_i + w_i with w_i odd of grade >= 3; purely odd
            // images validate automatically
            std::vector<Multivector> images;
            for (int i = 1; i <= sig.n; ++i) {
                Multivector e = Multivector::generator(sig, i);
                if (sig.n >= 3) e = e + random_odd(rng, sig, 3);
                images.push_back(std::move(e));
            }
            return Morphism(sig, std::move(images));
        }
        case AutProfile::composite: {
            Morphism f = sample_automorphism(rng, sig, AutProfile::linear);
            f = compose(f, sample_automorphism(rng, sig, AutProfile::inner));
            f = compose(f, sample_automorphism(rng, sig, AutProfile::unipotent));
            return f;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

inline Morphism random_automorphism(const AlgebraSignature& sig, std::uint64_t seed, AutProfile profile) {
    require_odd_characteristic(sig.field);
    if (sig.n > 12) throw std::invalid_argument("random_automorphism limited to n <= 12");
    Rng rng(seed);
    return detail::sample_automorphism(rng, sig, profile);
}

}  // namespace exalg
