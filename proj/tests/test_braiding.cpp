#include <doctest.h>

#include "qweyl/braiding.hpp"
#include "qweyl/catalog.hpp"

using namespace qweyl;

namespace {
RootOfUnity rot(long long a, long long n) { return RootOfUnity::from_fraction(a, n); }
}  // namespace

TEST_CASE("bicharacter evaluation is biadditive") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    Weight a({2, -1}), b({1, 3}), c({-2, 5});
    CHECK(q.eval(a + c, b) == q.eval(a, b) * q.eval(c, b));
    CHECK(q.eval(a, b + c) == q.eval(a, b) * q.eval(a, c));
    CHECK(q.eval(Weight::zero(2), b).is_one());
    CHECK(q.eval(Weight::basis(2, 0), Weight::basis(2, 1)) == q.at(0, 1));
    CHECK(q.eval(-a, b) == q.eval(a, b).inverse());
}

TEST_CASE("bounds are orders of diagonal bicharacter values") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    CHECK(*q.bound(Weight({1, 0})) == 2);
    CHECK(*q.bound(Weight({1, 1})) == 4);
    CHECK(*q.bound(Weight({0, 1})) == 2);
    CHECK(*q.bound(Weight({-1, -1})) == 4);

    BraidingMatrix flat(1, {rot(0, 1)});
    CHECK_FALSE(flat.bound(Weight({1})).has_value());
}

TEST_CASE("Cartan entries of the worked families") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    CHECK(q.cartan_entry(0, 0) == 2);
    CHECK(q.cartan_entry(0, 1) == -1);
    CHECK(q.cartan_entry(1, 0) == -1);
    CHECK(q.cartan_entry(1, 1) == 2);

    BraidingMatrix b2 = catalog_matrix("cartan-B2", {{"q", "7"}});
    CHECK(b2.cartan_entry(0, 1) == -1);
    CHECK(b2.cartan_entry(1, 0) == -2);
}

TEST_CASE("q_ii = 1 couples only to trivial off-diagonal products") {
    // q_12 q_21 = 1: the vertex decouples
    BraidingMatrix ok(2, {rot(0, 1), rot(1, 3), rot(2, 3), rot(1, 2)});
    CHECK(ok.cartan_entry(0, 1) == 0);
    // q_12 q_21 = zeta_3: no finite column
    BraidingMatrix bad(2, {rot(0, 1), rot(1, 3), rot(0, 1), rot(1, 2)});
    CHECK_THROWS_AS(bad.cartan_entry(0, 1), NotFiniteType);
}

TEST_CASE("simple reflections and the reflection operator") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    LatticeAutomorphism s1 = q.simple_reflection(0);
    CHECK(s1.apply(Weight::basis(2, 0)) == Weight({-1, 0}));
    CHECK(s1.apply(Weight::basis(2, 1)) == Weight({1, 1}));
    CHECK(s1.compose(s1) == LatticeAutomorphism::identity(2));

    // r_i(q) is the dual action of sigma_i, and r_i is an involution
    for (size_t i = 0; i < 2; ++i) {
        CHECK(q.reflect(i) == q.dual_action(q.simple_reflection(i)));
        CHECK(q.reflect(i).reflect(i) == q);
        // row i of the Cartan matrix survives the reflection
        for (size_t j = 0; j < 2; ++j)
            CHECK(q.reflect(i).cartan_entry(i, j) == q.cartan_entry(i, j));
    }

    // the reflected matrix of the worked N=4 example
    BraidingMatrix p = q.reflect(0);
    CHECK(p.at(0, 0) == rot(1, 2));
    CHECK(p.at(0, 1) == rot(3, 4));
    CHECK(p.at(1, 0) == rot(0, 1));
    CHECK(p.at(1, 1) == rot(1, 4));
}

TEST_CASE("transpose flips the bicharacter") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "5"}});
    BraidingMatrix qt = q.transpose();
    Weight a({1, 2}), b({-3, 1});
    CHECK(qt.eval(a, b) == q.eval(b, a));
    CHECK(qt.transpose() == q);
}
