#pragma once

// Algebra endomorphisms given by generator images, validated against the
// universal-property relations, plus the machinery around Aut(A): induced
// maps on graded pieces, the section from GL(A_1), inner derivations and
// their exponentials, the semidirect factorization, center and commutator
// subalgebra.
//
// Everything here assumes char != 2; constructors reject p = 2 because
// odd elements need not square to zero there.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "multivector.hpp"

namespace exalg {

inline void require_odd_characteristic(const FieldSpec& f) {
    if (f.characteristic() == 2)
        throw std::domain_error("automorphism machinery requires characteristic != 2");
}

// a^b - b^a
inline Multivector commutator(const Multivector& a, const Multivector& b) {
    return a.wedge(b) - b.wedge(a);
}

class Morphism {
public:
    // Validates the universal-property conditions: every image lies in the
    // maximal ideal, squares to zero, and anticommutes with every other
    // image. Throws with the offending pair otherwise.
    Morphism(AlgebraSignature sig, std::vector<Multivector> images)
        : sig_(sig), images_(std::move(images)) {
        require_odd_characteristic(sig.field);
        if (static_cast<int>(images_.size()) != sig_.n)
            throw std::invalid_argument("expected " + std::to_string(sig_.n) + " generator images");
        for (const auto& img : images_) {
            sig_.require_same(img.signature());
            if (!img.grade_project(0).is_zero())
                throw std::invalid_argument("generator image has a nonzero scalar component");
        }
        for (int i = 0; i < sig_.n; ++i)
            for (int j = i; j < sig_.n; ++j) {
                Multivector p = images_[i].wedge(images_[j]) + images_[j].wedge(images_[i]);
                if (!p.is_zero())
                    throw std::invalid_argument("relation check failed for images of (e" + std::to_string(i + 1) +
                                                ", e" + std::to_string(j + 1) + "): product is nonzero");
            }
    }

    static Morphism identity(AlgebraSignature sig) {
        std::vector<Multivector> images;
        for (int i = 1; i <= sig.n; ++i) images.push_back(Multivector::generator(sig, i));
        return Morphism(sig, std::move(images));
    }

    const AlgebraSignature& signature() const { return sig_; }
    const Multivector& image(int i) const { return images_.at(i - 1); }
    const std::vector<Multivector>& images() const { return images_; }

    // Multiplicative extension: a blade maps to the wedge of its generator
    // images in index order, and the whole map is linear. f(1) = 1.
    Multivector apply(const Multivector& x) const {
        sig_.require_same(x.signature());
        Multivector out(sig_);
        for (const auto& [b, c] : x.terms()) {
            Multivector prod = Multivector::unit(sig_);
            for (int i : b.indices()) {
                prod = prod.wedge(images_[i - 1]);
                if (prod.is_zero()) break;
            }
            out = out + prod * c;
        }
        return out;
    }

    bool operator==(const Morphism& o) const { return sig_ == o.sig_ && images_ == o.images_; }
    bool operator!=(const Morphism& o) const { return !(*this == o); }

private:
    AlgebraSignature sig_;
    std::vector<Multivector> images_;
};

// this-after-other
inline Morphism compose(const Morphism& f, const Morphism& g) {
    f.signature().require_same(g.signature());
    std::vector<Multivector> images;
    for (int i = 1; i <= f.signature().n; ++i) images.push_back(f.apply(g.image(i)));
    return Morphism(f.signature(), std::move(images));
}

// The section g: GL(A_1) -> Gamma, tau's columns taken as grade-1 images.
// A singular tau still builds fine; the result just fails is_automorphism.
inline Morphism lift_linear(const LinearMap& tau, AlgebraSignature sig) {
    if (tau.size() != sig.n || tau.field() != sig.field)
        throw std::invalid_argument("linear map does not match signature");
    std::vector<Multivector> images;
    for (int j = 1; j <= sig.n; ++j) {
        Multivector v(sig);
        for (int i = 1; i <= sig.n; ++i) v.add_term(Blade::from_indices({i}, sig.n), tau.at(i, j));
        images.push_back(v);
    }
    return Morphism(sig, std::move(images));
}

// Matrix of the induced map sigma_i on the A_i basis (the action on
// M^i/M^{i+1}): the column for blade b is the grade-i part of f(b).
inline LinearMap induced_grade_map(const Morphism& f, int grade) {
    const AlgebraSignature& sig = f.signature();
    if (grade < 0 || grade > sig.n) throw std::out_of_range("grade out of range");
    std::vector<Blade> basis = basis_enumerate(sig, grade);
    int dim = static_cast<int>(basis.size());
    LinearMap m(dim, sig.field);
    for (int col = 1; col <= dim; ++col) {
        Multivector img = f.apply(Multivector::term(sig, basis[col - 1], Scalar::one(sig.field)));
        for (int row = 1; row <= dim; ++row) m.at(row, col) = img.coefficient(basis[row - 1]);
    }
    return m;
}

// Invertibility of the grade-1 induced map decides the whole morphism:
// the tail raises filtration degree, so it is unipotent over the local
// algebra and never obstructs inversion.
inline bool is_automorphism(const Morphism& f) {
    return !induced_grade_map(f, 1).det_gauss().is_zero();
}

// sigma = n_part . g(tau), with tau the grade-1 induced map and n_part in
// N = ker(f_1). The pair is unique.
struct SemidirectFactors {
    Morphism n_part;
    LinearMap tau;
};

inline SemidirectFactors semidirect_factor(const Morphism& sigma) {
    LinearMap tau = induced_grade_map(sigma, 1);
    if (tau.det_gauss().is_zero()) throw std::domain_error("not an automorphism: grade-1 map is singular");
    Morphism n_part = compose(sigma, lift_linear(tau.inverse(), sigma.signature()));
    return {std::move(n_part), std::move(tau)};
}

namespace detail {

// Inverse images of an element of N via the terminating Neumann series:
// with eta = n_part - id raising filtration degree, the inverse of each
// generator is sum_k (-1)^k eta^k(e_i).
inline Morphism invert_unipotent(const Morphism& n_part) {
    const AlgebraSignature& sig = n_part.signature();
    std::vector<Multivector> images;
    for (int i = 1; i <= sig.n; ++i) {
        Multivector e = Multivector::generator(sig, i);
        Multivector acc = e, power = e;
        for (int k = 1; k <= sig.n && !power.is_zero(); ++k) {
            power = n_part.apply(power) - power;  // eta
            acc = k % 2 == 0 ? acc + power : acc - power;
        }
        images.push_back(std::move(acc));
    }
    return Morphism(sig, std::move(images));
}

}  // namespace detail

inline Morphism invert_automorphism(const Morphism& sigma) {
    SemidirectFactors parts = semidirect_factor(sigma);  // throws when singular
    Morphism n_inv = detail::invert_unipotent(parts.n_part);
    return compose(lift_linear(parts.tau.inverse(), sigma.signature()), n_inv);
}

// exp(D_a) = 1 + D_a for odd a: images e_i + [a, e_i]. Always a member
// of N, and always an automorphism.
inline Morphism exp_inner_derivation(const Multivector& a) {
    const AlgebraSignature& sig = a.signature();
    require_odd_characteristic(sig.field);
    if (a.odd_part() != a) throw std::invalid_argument("exp_inner_derivation requires a purely odd element");
    std::vector<Multivector> images;
    for (int i = 1; i <= sig.n; ++i) {
        Multivector e = Multivector::generator(sig, i);
        images.push_back(e + commutator(a, e));
    }
    return Morphism(sig, std::move(images));
}

// Brute-force center: blades commuting with every generator. Generators
// suffice since they generate A. Must (and does) come out as
// (+) A_{2i} + A_n.
inline std::vector<Blade> center_basis(const AlgebraSignature& sig) {
    require_odd_characteristic(sig.field);
    if (sig.n > 12) throw std::invalid_argument("center_basis limited to n <= 12");
    std::vector<Blade> out;
    for (Blade b : basis_all(sig)) {
        Multivector x = Multivector::term(sig, b, Scalar::one(sig.field));
        bool central = true;
        for (int i = 1; i <= sig.n && central; ++i)
            central = commutator(x, Multivector::generator(sig, i)).is_zero();
        if (central) out.push_back(b);
    }
    return out;
}

// Span-and-wedge closure of {1} and all commutators of basis blades.
// A commutator of blades is zero or a scalar multiple of a single blade,
// so the spanned subspace stays a set of blades throughout.
inline std::vector<Blade> comm_subalgebra_basis(const AlgebraSignature& sig) {
    require_odd_characteristic(sig.field);
    if (sig.n > 10) throw std::invalid_argument("comm_subalgebra_basis limited to n <= 10");
    std::vector<Blade> all = basis_all(sig);
    std::set<std::uint64_t> span;
    span.insert(Blade::unit().mask());
    Scalar one = Scalar::one(sig.field);
    for (Blade u : all)
        for (Blade v : all) {
            Multivector c = commutator(Multivector::term(sig, u, one), Multivector::term(sig, v, one));
            if (!c.is_zero()) span.insert(c.terms().begin()->first.mask());
        }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> current(span.begin(), span.end());
        for (std::uint64_t a : current)
            for (std::uint64_t b : current) {
                WedgeSign ws = blade_wedge_sign(Blade(a), Blade(b));
                if (ws.sign != 0 && span.insert(ws.result.mask()).second) grew = true;
            }
    }
    std::vector<Blade> out;
    for (std::uint64_t m : span) out.push_back(Blade(m));
    std::sort(out.begin(), out.end(), [](Blade a, Blade b) { return BladeOrder{}(a, b); });
    return out;
}

}  // namespace exalg
