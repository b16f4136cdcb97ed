#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "exalg/words.hpp"

using namespace exalg;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

FreeWord word(std::vector<int> letters, FieldSpec f = kQ) {
    return FreeWord(Scalar::one(f), std::move(letters));
}
}  // namespace

TEST_CASE("poly_normalize sorts letters into exponent vectors") {
    CommutativeMonomial m = poly_normalize(word({1, 1, 3}), 3);
    CHECK(m.exponents == std::vector<int>{2, 0, 1});  // x1^2 x3
    CHECK(m.coefficient == Scalar::one(kQ));

    CHECK(poly_normalize(word({}), 3).exponents == std::vector<int>{0, 0, 0});

    FreeWord w(Scalar::from_integer(3, kQ), {2, 1, 2});
    CommutativeMonomial m2 = poly_normalize(w, 3);
    CHECK(m2.exponents == std::vector<int>{1, 2, 0});  // 3 x1 x2^2
    CHECK(m2.coefficient == Scalar::from_integer(3, kQ));

    CHECK_THROWS_AS(poly_normalize(word({4}), 3), std::out_of_range);
}

TEST_CASE("poly_normalize is permutation invariant") {
    std::vector<int> letters{3, 1, 2, 1};
    CommutativeMonomial base = poly_normalize(word(letters), 3);
    std::sort(letters.begin(), letters.end());
    do {
        REQUIRE(poly_normalize(word(letters), 3) == base);
    } while (std::next_permutation(letters.begin(), letters.end()));
}

TEST_CASE("exterior normal forms via sort-with-sign") {
    AlgebraSignature sig(3, kQ);
    CHECK(normalize_word(word({2, 1}), sig, RelationMode::alternating_m1) ==
          -Multivector::term(sig, Blade::from_indices({1, 2}, 3), Scalar::one(kQ)));
    CHECK(normalize_word(word({1, 1}), sig, RelationMode::alternating_m1).is_zero());
    // inversion count of (3,1,2) is 2: sign +
    CHECK(normalize_word(word({3, 1, 2}), sig, RelationMode::alternating_m1) ==
          Multivector::term(sig, Blade::from_indices({1, 2, 3}, 3), Scalar::one(kQ)));
}

TEST_CASE("methods 1 and 2 agree away from characteristic 2, exhaustively") {
    for (FieldSpec f : {kQ, FieldSpec::prime(5)}) {
        AlgebraSignature sig(4, f);
        // all words of length <= 4 over 4 letters
        for (int len = 0; len <= 4; ++len) {
            std::vector<int> letters(len, 1);
            while (true) {
                FreeWord w(Scalar::one(f), letters);
                REQUIRE(normalize_word(w, sig, RelationMode::alternating_m1) ==
                        normalize_word(w, sig, RelationMode::anticommutative_m2));
                int i = len - 1;
                while (i >= 0 && letters[i] == 4) --i;
                if (i < 0) break;
                ++letters[i];
                for (int j = i + 1; j < len; ++j) letters[j] = 1;
            }
        }
    }
}

TEST_CASE("word normalization is an algebra homomorphism onto the exterior core") {
    AlgebraSignature sig(4, kQ);
    std::vector<std::vector<int>> samples{{}, {1}, {2, 1}, {3, 1, 2}, {4, 4}, {2, 3, 1}, {1, 3}};
    for (const auto& u : samples)
        for (const auto& v : samples) {
            std::vector<int> uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            Multivector lhs = normalize_word(word(uv), sig, RelationMode::alternating_m1);
            Multivector rhs = normalize_word(word(u), sig, RelationMode::alternating_m1)
                                  .wedge(normalize_word(word(v), sig, RelationMode::alternating_m1));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("characteristic-2 report") {
    Char2Report r = char2_report(FieldSpec::prime(2));
    CHECK(r.m1_commutes);          // e1e2 = e2e1 under <v(x)v>
    CHECK(r.m1_square_zero);       // e1e1 = 0 is a generator of the ideal
    CHECK_FALSE(r.m2_square_reduces);  // <vw + wv> cannot reach e1e1
    CHECK_FALSE(r.witness.empty());
    CHECK_THROWS_AS(char2_report(kQ), std::domain_error);
    CHECK_THROWS_AS(char2_report(FieldSpec::prime(5)), std::domain_error);
}

TEST_CASE("m2 normalization refuses characteristic 2") {
    AlgebraSignature sig(3, FieldSpec::prime(2));
    CHECK_THROWS_AS(normalize_word(word({1, 2}, FieldSpec::prime(2)), sig, RelationMode::anticommutative_m2),
                    std::domain_error);
    // m1 still normalizes: the alternating relation holds in any characteristic
    CHECK(normalize_word(word({1, 1}, FieldSpec::prime(2)), sig, RelationMode::alternating_m1).is_zero());
}
