#include <catch2/catch_amalgamated.hpp>

#include "exalg/field.hpp"
#include "exalg/random.hpp"

using namespace exalg;

TEST_CASE("rational arithmetic is exact and canonical") {
    FieldSpec q = FieldSpec::rationals();
    Scalar half = Scalar::from_fraction(1, 2, q);
    Scalar third = Scalar::from_fraction(1, 3, q);
    CHECK(half + third == Scalar::from_fraction(5, 6, q));
    CHECK((half * Scalar::zero(q)).is_zero());
    CHECK(Scalar::from_fraction(2, 4, q) == half);
    CHECK(Scalar::from_fraction(-1, -2, q) == half);         // positive denominator
    CHECK(Scalar::from_fraction(3, -6, q) == -half);
    CHECK(Scalar::from_fraction(0, 7, q) == Scalar::zero(q));  // unique zero
    CHECK(half.str() == "1/2");
    CHECK((-half).str() == "-1/2");
    CHECK(Scalar::from_integer(4, q).str() == "4");
}

TEST_CASE("prime field arithmetic") {
    FieldSpec f2 = FieldSpec::prime(2);
    CHECK((Scalar::one(f2) + Scalar::one(f2)).is_zero());
    FieldSpec f5 = FieldSpec::prime(5);
    Scalar three = Scalar::from_integer(3, f5);
    CHECK(three + three == Scalar::from_integer(1, f5));
    CHECK(three.inverse() == Scalar::from_integer(2, f5));  // 3*2 = 6 = 1 mod 5
    CHECK(three / three == Scalar::one(f5));
    CHECK((-three) == Scalar::from_integer(2, f5));
    CHECK(Scalar::from_integer(-3, f5) == Scalar::from_integer(2, f5));
    CHECK(three.str() == "3");
    CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
    CHECK(f2.characteristic() == 2);
    CHECK(FieldSpec::rationals().characteristic() == 0);
}

TEST_CASE("division by zero and field mismatch are errors") {
    FieldSpec q = FieldSpec::rationals();
    CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), std::domain_error);
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(FieldSpec::prime(5)), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)}) {
        Rng rng(20250826);
        for (int trial = 0; trial < 1000; ++trial) {
            Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + (-a)).is_zero());
            if (!b.is_zero()) CHECK(a / b * b == a);
        }
    }
}
