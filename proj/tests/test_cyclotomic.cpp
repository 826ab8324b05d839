#include <doctest.h>

#include "qweyl/cyclotomic.hpp"

using namespace qweyl;

TEST_CASE("rotations are stored reduced with 0 <= a < n") {
    CHECK(RootOfUnity::from_fraction(6, 4) == RootOfUnity::from_fraction(1, 2));
    CHECK(RootOfUnity::from_fraction(-1, 4) == RootOfUnity::from_fraction(3, 4));
    CHECK(RootOfUnity::from_fraction(8, 4).is_one());
    CHECK(RootOfUnity::from_fraction(0, 7).order() == 1);
    CHECK(RootOfUnity::from_fraction(2, 12) == RootOfUnity::from_fraction(1, 6));
    CHECK(RootOfUnity::from_fraction(-10, -4) == RootOfUnity::from_fraction(1, 2));
}

TEST_CASE("parse accepts a/N and bare integers") {
    CHECK(RootOfUnity::parse("3/4") == RootOfUnity::from_fraction(3, 4));
    CHECK(RootOfUnity::parse("-1/4") == RootOfUnity::from_fraction(3, 4));
    CHECK(RootOfUnity::parse("2").is_one());
    CHECK_THROWS_AS(RootOfUnity::parse("x"), UsageError);
    CHECK_THROWS_AS(RootOfUnity::parse("1/0"), UsageError);
    CHECK_THROWS_AS(RootOfUnity::parse("1/2/3"), UsageError);
    CHECK_THROWS_AS(RootOfUnity::parse(""), UsageError);
}

TEST_CASE("group operations") {
    auto sixth = RootOfUnity::from_fraction(1, 6);
    auto third = RootOfUnity::from_fraction(1, 3);
    CHECK(sixth * third == RootOfUnity::from_fraction(1, 2));
    CHECK(sixth.inverse() == RootOfUnity::from_fraction(5, 6));
    CHECK((sixth * sixth.inverse()).is_one());
    CHECK(sixth.pow(6).is_one());
    CHECK(sixth.pow(-1) == sixth.inverse());
    CHECK(sixth.pow(0).is_one());
    CHECK(sixth.order() == 6);
    CHECK(sixth.pow(2).order() == 3);
    CHECK(sixth.str() == "1/6");
    CHECK(RootOfUnity().str() == "0/1");
}

TEST_CASE("quantum number vanishing without materializing the sum") {
    auto i = RootOfUnity::from_fraction(1, 4);
    auto one = RootOfUnity();
    CHECK(quantum_number_is_zero(0, i));
    CHECK(quantum_number_is_zero(0, one));
    // (n)_1 = n != 0 for n > 0
    CHECK_FALSE(quantum_number_is_zero(3, one));
    // (4)_i = 0, (2)_i = 1 + i != 0
    CHECK(quantum_number_is_zero(4, i));
    CHECK_FALSE(quantum_number_is_zero(2, i));
    CHECK(quantum_number_is_zero(8, i));
    auto zeta3 = RootOfUnity::from_fraction(1, 3);
    CHECK(quantum_number_is_zero(3, zeta3));
    CHECK_FALSE(quantum_number_is_zero(2, zeta3));
}
