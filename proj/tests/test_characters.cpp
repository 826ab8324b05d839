#include <doctest.h>

#include "qweyl/catalog.hpp"
#include "qweyl/characters.hpp"

using namespace qweyl;

namespace {

struct Fixture {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    Groupoid g = Groupoid::orbit(q);
    std::vector<Morphism> hom = hom_into(g, 0);
    RootSystemData rs = compute_root_system(g, 0, hom);
    TorusCharacter triv = TorusCharacter::trivial(2);
    Weight beta{{1, 1}};
};

}  // namespace

TEST_CASE("formal character ring operations") {
    FormalCharacter a = FormalCharacter::monomial(Weight({1, 0}), 2);
    FormalCharacter b = FormalCharacter::monomial(Weight({0, 1}), 3);
    CHECK((a + b).term_count() == 2);
    CHECK((a + b).coefficient_sum() == 5);
    CHECK((a * b).coefficient(Weight({1, 1})) == 6);
    CHECK((a - a).is_zero());
    CHECK(a.bar().coefficient(Weight({-1, 0})) == 2);
    CHECK((a * b).str() == "6*e(1,1)");

    LatticeAutomorphism w({{0, -1}, {-1, 0}});
    CHECK(a.twist(w).coefficient(Weight({0, -1})) == 2);

    // cancellation removes the term entirely
    FormalCharacter c = a + (FormalCharacter() - a);
    CHECK(c.term_count() == 0);
    CHECK(c == FormalCharacter());

    FormalCharacter col = geometric_steps(Weight({1, 1}), 3);
    CHECK(col.term_count() == 3);
    CHECK(col.coefficient(Weight({0, 0})) == 1);
    CHECK(col.coefficient(Weight({-2, -2})) == 1);
    CHECK(geometric_steps(Weight({1, 1}), 0).is_zero());
}

TEST_CASE("the negative part of the worked example") {
    Fixture f;
    FormalCharacter u = ch_negative_part(f.rs);
    CHECK(u.coefficient_sum() == 16);  // 2 * 4 * 2
    CHECK(u.term_count() == 13);
    CHECK(u.coefficient(Weight({0, 0})) == 1);
    CHECK(u.coefficient(-f.rs.beta_top) == 1);
    // every exponent lies in [-beta_top, 0]
    for (const auto& [mu, c] : u.terms()) {
        CHECK(c > 0);
        CHECK(leq(-f.rs.beta_top, mu));
        CHECK(leq(mu, Weight::zero(2)));
    }

    Weight mu({2, -1});
    CHECK(ch_verma(f.rs, mu) == FormalCharacter::monomial(mu) * u);
}

TEST_CASE("twisted standard characters") {
    Fixture f;
    Weight mu({1, -2});
    // the identity twist is the plain character
    CHECK(ch_twisted_verma(f.rs, f.hom[0], mu) == ch_verma(f.rs, mu));
    // the full twist flips every column: a shift by beta_top
    const Morphism& w0 = longest_element(f.hom);
    CHECK(ch_twisted_verma(f.rs, w0, mu) == ch_verma(f.rs, mu + f.rs.beta_top));
    // the master identity, pinned at one weight per twist
    for (const Morphism& w : f.hom)
        CHECK(ch_twisted_verma(f.rs, w, shift(f.rs, w, mu)) == ch_verma(f.rs, mu));
}

TEST_CASE("typical simple characters are standard characters") {
    Fixture f;
    CHECK(ch_simple_typical(f.q, f.rs, f.triv, Weight({1, 3})) ==
          ch_verma(f.rs, Weight({1, 3})));
    CHECK_THROWS_AS(ch_simple_typical(f.q, f.rs, f.triv, Weight({3, 3})), NotTypical);
    CHECK_THROWS_AS(ch_simple_typical(f.q, f.rs, f.triv, Weight({0, 0})), NotTypical);
}

TEST_CASE("degree-one simple characters and standard filtration") {
    Fixture f;
    Weight mu({3, 3});  // n_beta = 2 along (1,1), simple roots regular
    FormalCharacter top = ch_simple_1atypical(f.q, f.rs, f.triv, mu);
    CHECK(top.coefficient_sum() == 2 * 2 * 2);
    CHECK(top.coefficient(mu) == 1);

    // ch L(mu) + ch L(beta down mu) exhausts the standard character
    Weight nu({1, 1});  // = beta down (3,3), again degree one with n = 2
    FormalCharacter low = ch_simple_1atypical(f.q, f.rs, f.triv, nu);
    CHECK(top + low == ch_verma(f.rs, mu));

    CHECK_THROWS_AS(ch_simple_1atypical(f.q, f.rs, f.triv, Weight({1, 3})),
                    WrongAtypicality);
    CHECK_THROWS_AS(ch_simple_1atypical(f.q, f.rs, f.triv, Weight({0, 0})),
                    WrongAtypicality);
}

TEST_CASE("kernel characters of the standard maps") {
    Fixture f;
    Weight mu({0, 0});
    Morphism w = morphism_from_word(f.g, 0, {0});  // beta = w(alpha_2) = (1,1)
    Weight beta = w.map.apply(Weight::basis(2, 1));
    CHECK(beta == f.beta);

    for (long long t = 1; t <= 3; ++t) {
        FormalCharacter ker = ch_kernel_phi(f.rs, w, beta, t, mu);
        CHECK(ker.coefficient_sum() == (4 - t) * 4);
        // the kernel sits inside the twisted standard module, term by term
        FormalCharacter whole = ch_twisted_verma(f.rs, w, mu);
        for (const auto& [weight, c] : ker.terms()) {
            CHECK(c <= whole.coefficient(weight));
        }
        CHECK(ker.coefficient(mu - beta * t) == 1);
        CHECK(ker.coefficient(mu) == 0);
    }

    CHECK_THROWS_AS(ch_kernel_phi(f.rs, w, beta, 0, mu), PreconditionUnmet);
    CHECK_THROWS_AS(ch_kernel_phi(f.rs, w, beta, 4, mu), PreconditionUnmet);
    CHECK_THROWS_AS(ch_kernel_phi(f.rs, w, Weight({2, 1}), 1, mu), UsageError);

    // beta must stay positive under the inverse twist
    Morphism s2 = morphism_from_word(f.g, 0, {1});
    CHECK_THROWS_AS(ch_kernel_phi(f.rs, s2, Weight({0, 1}), 1, mu), PreconditionUnmet);

    // quotient by the kernel: the degree-one simple character at a matching
    // shifted weight (t = n at the shift of w)
    Weight lam({3, 3});
    Morphism id = f.hom[0];
    long long n = 2;
    FormalCharacter ker = ch_kernel_phi(f.rs, id, f.beta, n, lam);
    CHECK(ch_verma(f.rs, lam) - ker == ch_simple_1atypical(f.q, f.rs, f.triv, lam));
}
