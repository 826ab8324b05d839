#include <doctest.h>

#include "qweyl/catalog.hpp"
#include "qweyl/rootsystem.hpp"

using namespace qweyl;

namespace {

RootSystemData system_of(const BraidingMatrix& q, const Groupoid& g, int object = 0) {
    return compute_root_system(g, object, hom_into(g, object));
}

}  // namespace

TEST_CASE("roots of the rank-2 super family") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    Groupoid g = Groupoid::orbit(q);
    RootSystemData rs = system_of(q, g);

    CHECK(rs.positive_roots ==
          std::vector<Weight>({Weight({1, 0}), Weight({1, 1}), Weight({0, 1})}));
    CHECK(rs.bounds == std::vector<long long>({2, 4, 2}));
    CHECK(rs.beta_top == Weight({4, 4}));
    CHECK(rs.is_cartan == std::vector<bool>({false, true, false}));

    // shortest presentations: simples by the identity, (1,1) = s1(alpha_2)
    CHECK(rs.presentation(Weight({1, 0})).w.is_identity());
    CHECK(rs.presentation(Weight({1, 0})).simple == 0);
    CHECK(rs.presentation(Weight({0, 1})).w.is_identity());
    CHECK(rs.presentation(Weight({1, 1})).w.word == std::vector<int>({0}));
    CHECK(rs.presentation(Weight({1, 1})).simple == 1);

    CHECK(rs.root_index(Weight({1, 1})) == 1);
    CHECK(rs.root_index(Weight({2, 1})) == -1);
    CHECK_THROWS_AS(rs.checked_index(Weight({2, 1})), UsageError);
    CHECK(rs.bound_of(Weight({1, 1})) == 4);
    CHECK(rs.cartan(Weight({1, 1})));
    CHECK_FALSE(rs.cartan(Weight({1, 0})));

    CHECK(positive_roots_oracle(g, hom_into(g, 0)) ==
          std::set<Weight>({Weight({1, 0}), Weight({1, 1}), Weight({0, 1})}));
    CHECK(&two_varrho(rs) == &rs.beta_top);
}

TEST_CASE("B2 roots with the (2,1) symmetrizer") {
    BraidingMatrix q = catalog_matrix("cartan-B2", {{"q", "7"}});
    Groupoid g = Groupoid::orbit(q);
    RootSystemData rs = system_of(q, g);
    std::set<Weight> expect{Weight({1, 0}), Weight({1, 1}), Weight({1, 2}), Weight({0, 1})};
    CHECK(std::set<Weight>(rs.positive_roots.begin(), rs.positive_roots.end()) == expect);
    for (long long b : rs.bounds) CHECK(b == 7);
    CHECK(rs.beta_top == Weight({18, 24}));
    for (bool c : rs.is_cartan) CHECK(c);
}

TEST_CASE("shifted weights") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    Groupoid g = Groupoid::orbit(q);
    auto hom = hom_into(g, 0);
    RootSystemData rs = compute_root_system(g, 0, hom);
    Weight mu({3, -2});

    CHECK(shift(rs, hom[0], mu) == mu);
    CHECK(shift(rs, rs.w0, mu) == mu - rs.beta_top);
    // w = s1 flips alpha_1 only, which has bound 2
    Morphism s1 = morphism_from_word(g, 0, {0});
    CHECK(shift(rs, s1, mu) == mu - Weight({1, 0}));
    // w = s1 s2 flips alpha_1 and s1(alpha_2) = (1,1) with bound 4
    Morphism s1s2 = morphism_from_word(g, 0, {0, 1});
    CHECK(shift(rs, s1s2, mu) == mu - Weight({1, 0}) - Weight({3, 3}));

    // recurrence: extending the word costs (b(w alpha_i) - 1) w alpha_i
    for (const Morphism& w : hom) {
        for (int gen = 0; gen < 2; ++gen) {
            Weight beta = w.map.apply(Weight::basis(2, gen));
            if (!beta.nonneg()) continue;
            std::vector<int> word = w.word;
            word.push_back(gen);
            Morphism ext = morphism_from_word(g, 0, word);
            CHECK(shift(rs, ext, mu) == shift(rs, w, mu) - beta * (rs.bound_of(beta) - 1));
        }
    }
}

TEST_CASE("Cartan vertices") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    CHECK_FALSE(is_cartan_vertex(q, 0));
    CHECK_FALSE(is_cartan_vertex(q, 1));
    BraidingMatrix a2 = catalog_matrix("cartan-A2", {{"q", "5"}});
    CHECK(is_cartan_vertex(a2, 0));
    CHECK(is_cartan_vertex(a2, 1));
}

TEST_CASE("standard type across the orbit") {
    BraidingMatrix q = catalog_matrix("super-A11", {{"N", "4"}});
    Groupoid g = Groupoid::orbit(q);
    auto systems = root_systems_for_all_objects(g);
    CHECK(systems.size() == 6);
    CHECK(is_standard_type(g, systems));
    StandardBundle bundle = require_standard_type(g, systems);
    CHECK(bundle.cartan == std::vector<std::vector<long long>>({{2, -1}, {-1, 2}}));
    CHECK(bundle.positive_roots == systems[0].positive_roots);
}

TEST_CASE("a vanishing diagonal entry has no finite column") {
    // q_22 = 1 decoupled: alpha_2 carries an infinite bound
    BraidingMatrix q(2, {RootOfUnity::from_fraction(1, 2), RootOfUnity(), RootOfUnity(),
                         RootOfUnity()});
    Groupoid g = Groupoid::orbit(q);
    CHECK_THROWS_AS(system_of(q, g), InfiniteBound);
}
