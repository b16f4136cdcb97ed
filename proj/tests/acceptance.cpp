// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.
// argv[1] (optional): path to the CLI binary, used by the determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "exalg/determinant.hpp"
#include "exalg/invariant.hpp"
#include "exalg/morphism.hpp"
#include "exalg/parse.hpp"
#include "exalg/random.hpp"
#include "exalg/words.hpp"

using namespace exalg;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

int g_failures = 0;

void report(int number, const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "\n";
    if (!ok) ++g_failures;
}

BigInt binom(int n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// 1. Dimension law
bool dimension_law() {
    for (int n = 1; n <= 10; ++n) {
        AlgebraSignature sig(n, kQ);
        BigInt total = 0;
        for (int k = 0; k <= n; ++k) {
            std::size_t dk = basis_enumerate(sig, k).size();
            if (BigInt(dk) != binom(n, k)) return false;
            total += BigInt(dk);
        }
        if (total != BigInt(1) << n) return false;
    }
    return true;
}

// 2. Wedge laws at n = 6
bool wedge_laws() {
    AlgebraSignature sig(6, kQ);
    Rng rng(1001);
    for (int trial = 0; trial < 1000; ++trial) {
        Multivector x = random_multivector(rng, sig);
        Multivector y = random_multivector(rng, sig);
        Multivector z = random_multivector(rng, sig);
        Scalar c = random_scalar(rng, kQ);
        if (x.wedge(y).wedge(z) != x.wedge(y.wedge(z))) return false;
        if ((x + y).wedge(z) != x.wedge(z) + y.wedge(z)) return false;
        if (x.wedge(y + z) != x.wedge(y) + x.wedge(z)) return false;
        if ((x * c).wedge(y) != x.wedge(y) * c) return false;
        for (int p = 0; p <= 6; ++p)
            for (int q = 0; p + q <= 6; ++q) {
                Multivector xp = x.grade_project(p), yq = y.grade_project(q);
                Multivector rhs = yq.wedge(xp);
                if ((p * q) % 2 == 1) rhs = -rhs;
                if (xp.wedge(yq) != rhs) return false;
            }
    }
    return true;
}

// 3. Golden vectors: n=3 bivector expansion and trivector coefficient
bool golden_vectors() {
    AlgebraSignature sig(3, kQ);
    Rng rng(1003);
    for (int trial = 0; trial < 100; ++trial) {
        std::array<Scalar, 3> a{random_scalar(rng, kQ), random_scalar(rng, kQ), random_scalar(rng, kQ)};
        std::array<Scalar, 3> b{random_scalar(rng, kQ), random_scalar(rng, kQ), random_scalar(rng, kQ)};
        std::array<Scalar, 3> c{random_scalar(rng, kQ), random_scalar(rng, kQ), random_scalar(rng, kQ)};
        Multivector v = Multivector::zero(sig), w = Multivector::zero(sig), u = Multivector::zero(sig);
        for (int i = 0; i < 3; ++i) {
            v = v + Multivector::generator(sig, i + 1) * a[i];
            w = w + Multivector::generator(sig, i + 1) * b[i];
            u = u + Multivector::generator(sig, i + 1) * c[i];
        }
        // v ^ w = (a1b2-a2b1) e12 + (a1b3-a3b1) e13 + (a2b3-a3b2) e23
        Multivector vw = v.wedge(w);
        auto coeff = [&](const Multivector& m, std::vector<int> idx) {
            return m.coefficient(Blade::from_indices(idx, 3));
        };
        if (coeff(vw, {1, 2}) != a[0] * b[1] - a[1] * b[0]) return false;
        if (coeff(vw, {1, 3}) != a[0] * b[2] - a[2] * b[0]) return false;
        if (coeff(vw, {2, 3}) != a[1] * b[2] - a[2] * b[1]) return false;
        // v ^ w ^ u = det[a|b|c] e123
        SquareMatrix m(3, kQ);
        for (int i = 1; i <= 3; ++i) {
            m.at(i, 1) = a[i - 1];
            m.at(i, 2) = b[i - 1];
            m.at(i, 3) = c[i - 1];
        }
        if (coeff(vw.wedge(u), {1, 2, 3}) != det_leibniz(m)) return false;
    }
    return true;
}

// 4. Determinant equivalence
bool det_equivalence() {
    Rng rng(1004);
    for (int trial = 0; trial < 500; ++trial) {
        int n = rng.int_in(1, 6);
        SquareMatrix m = random_matrix(rng, n, kQ);
        Scalar w = det_wedge(m);
        if (n <= 8 && det_leibniz(m) != w) return false;
        for (int row = 1; row <= n; ++row)
            if (det_cofactor(m, row) != w) return false;
    }
    return true;
}

// 5. Uniqueness factoring
bool uniqueness_factoring() {
    Rng rng(1005);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.int_in(1, 5);
        SquareMatrix m = random_matrix(rng, n, kQ);
        Scalar c = random_scalar(rng, kQ);
        if (det_uniqueness_check(c, m) != c * det_wedge(m)) return false;
    }
    return true;
}

// 6. Universal-property validation
bool universal_property() {
    AlgebraSignature sig(3, kQ);
    Multivector bad = Multivector::generator(sig, 1) +
                      Multivector::term(sig, Blade::from_indices({2, 3}, 3), Scalar::one(kQ));
    if (bad.wedge(bad) !=
        Multivector::term(sig, Blade::from_indices({1, 2, 3}, 3), Scalar::from_integer(2, kQ)))
        return false;
    try {
        Morphism reject(sig, {bad, Multivector::generator(sig, 2), Multivector::generator(sig, 3)});
        return false;  // must have thrown
    } catch (const std::invalid_argument&) {
    }
    Rng rng(1006);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.int_in(2, 6);
        AlgebraSignature s(n, kQ);
        std::vector<Multivector> images;
        for (int i = 0; i < n; ++i) images.push_back(random_odd(rng, s, 1));
        try {
            Morphism f(s, images);
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

// 7. Inner automorphisms
bool inner_automorphisms() {
    Rng rng(1007);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.int_in(2, 6);
        AlgebraSignature sig(n, kQ);
        Multivector a = random_odd(rng, sig, 1), b = random_odd(rng, sig, 1);
        for (Blade blade : basis_all(sig)) {
            Multivector x = Multivector::term(sig, blade, Scalar::one(kQ));
            if (!commutator(a, commutator(b, x)).is_zero()) return false;
        }
        Morphism e = exp_inner_derivation(a);
        if (!is_automorphism(e)) return false;
        Multivector x = random_multivector(rng, sig), y = random_multivector(rng, sig);
        if (e.apply(x.wedge(y)) != e.apply(x).wedge(e.apply(y))) return false;
        if (invert_automorphism(e) != exp_inner_derivation(-a)) return false;
    }
    return true;
}

// 8. Semidirect factorization
bool semidirect() {
    Rng rng(1008);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.int_in(2, 5);
        AlgebraSignature sig(n, kQ);
        Morphism sigma = random_automorphism(sig, rng.next(), AutProfile::composite);
        SemidirectFactors parts = semidirect_factor(sigma);
        if (!induced_grade_map(parts.n_part, 1).is_identity()) return false;
        if (compose(parts.n_part, lift_linear(parts.tau, sig)) != sigma) return false;
        if (!semidirect_factor(parts.n_part).tau.is_identity()) return false;
    }
    return true;
}

// 9. Center
bool center() {
    for (int n = 2; n <= 7; ++n) {
        AlgebraSignature sig(n, kQ);
        std::set<Blade, BladeOrder> expected;
        for (Blade b : basis_all(sig))
            if (b.grade() % 2 == 0 || b.grade() == n) expected.insert(b);
        std::vector<Blade> got = center_basis(sig);
        if (std::set<Blade, BladeOrder>(got.begin(), got.end()) != expected) return false;
        if (n % 2 == 0)
            for (Blade b : got)
                if (b.grade() % 2 != 0) return false;
    }
    return true;
}

// 10. Commutator subalgebra
bool comm_subalgebra() {
    for (int n = 2; n <= 7; ++n) {
        AlgebraSignature sig(n, kQ);
        std::set<Blade, BladeOrder> expected;
        for (Blade b : basis_all(sig))
            if (b.grade() % 2 == 0) expected.insert(b);
        std::vector<Blade> got = comm_subalgebra_basis(sig);
        if (std::set<Blade, BladeOrder>(got.begin(), got.end()) != expected) return false;
    }
    return true;
}

// 11. Classification sweep
bool classification() {
    for (int n : {3, 4}) {
        AlgebraSignature sig(n, kQ);
        Classification c = classify_bruteforce(sig, 200, 424242);
        if (!c.anomalies.empty()) return false;
        std::size_t closed = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            std::set<int> grades;
            for (int k = 0; k <= n; ++k)
                if ((bits >> k) & 1) grades.insert(k);
            if (is_subalgebra(gradeset_custom(sig, grades))) ++closed;
        }
        if (c.matched.size() + c.refuted.size() != closed) return false;
        for (const auto& ref : c.refuted) {
            std::set<int> grades = witness_image_grades(ref.witness);
            if (grades.count(ref.witness.escaping_grade) != 1) return false;
            if (ref.grades.count(ref.witness.escaping_grade) != 0) return false;
        }
    }
    return true;
}

// 12. Char-2 demonstration
bool char2_demo() {
    Char2Report r = char2_report(FieldSpec::prime(2));
    return r.m1_commutes && r.m1_square_zero && !r.m2_square_reduces;
}

// 13. Frontend round trip + CLI determinism
bool frontend(const char* cli_path) {
    Rng rng(1013);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
        AlgebraSignature sig(4, f);
        for (int trial = 0; trial < 1000; ++trial) {
            Multivector x = random_multivector(rng, sig);
            std::string s = format_canonical(x);
            if (parse_expr(s, sig) != x) return false;
            if (format_canonical(parse_expr(s, sig)) != s) return false;
        }
    }
    if (cli_path == nullptr) return true;
    auto run = [&](const std::string& cmd) {
        std::string out;
        FILE* p = popen(cmd.c_str(), "r");
        if (!p) return std::string("<popen failed>");
        char buf[4096];
        std::size_t got;
        while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
        pclose(p);
        return out;
    };
    std::string cmd = std::string("'") + cli_path +
                      "' invariant classify --n 3 --samples 20 --seed 7 --output json 2>&1";
    std::string a = run(cmd), b = run(cmd);
    return !a.empty() && a == b;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    report(1, "dimension law dim(A_k) = C(n,k), dim(A) = 2^n", dimension_law());
    report(2, "wedge associativity, bilinearity, graded commutativity", wedge_laws());
    report(3, "golden vectors: bivector expansion, trivector coefficient", golden_vectors());
    report(4, "determinant three-way equivalence", det_equivalence());
    report(5, "determinant uniqueness factoring", uniqueness_factoring());
    report(6, "universal-property image validation", universal_property());
    report(7, "inner derivations and exp(D_a)", inner_automorphisms());
    report(8, "semidirect factorization sigma = n . g(tau)", semidirect());
    report(9, "center equals even part plus top grade", center());
    report(10, "commutator subalgebra equals even part", comm_subalgebra());
    report(11, "invariant-subalgebra classification sweep", classification());
    report(12, "characteristic-2 relation comparison", char2_demo());
    report(13, "frontend round trip and CLI determinism", frontend(cli));
    if (g_failures > 0) {
        std::cout << g_failures << " criterion/criteria failed\n";
        return 1;
    }
    std::cout << "all 13 criteria passed\n";
    return 0;
}
