#include <doctest.h>

#include "qweyl/catalog.hpp"
#include "qweyl/linkage.hpp"

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

RootOfUnity rot(long long a, long long n) { return RootOfUnity::from_fraction(a, n); }

}  // namespace

TEST_CASE("torus characters evaluate multiplicatively") {
    TorusCharacter pi = TorusCharacter::trivial(2);
    CHECK(pi.is_trivial());
    pi.k = {rot(1, 3), rot(1, 2)};
    pi.l = {rot(1, 4), rot(0, 1)};
    CHECK_FALSE(pi.is_trivial());
    CHECK(pi.K(Weight({2, 1})) == rot(2, 3) * rot(1, 2));
    CHECK(pi.L(Weight({-1, 5})) == rot(3, 4));
    CHECK(pi.K(Weight::zero(2)).is_one());
}

TEST_CASE("the evaluation map is additive in mu") {
    Fixture f;
    TorusCharacter pi = TorusCharacter::trivial(2);
    pi.k = {rot(1, 5), rot(2, 3)};
    pi.l = {rot(1, 2), rot(3, 4)};
    Weight mu({2, -1}), nu({-3, 4}), a({1, 2}), b({0, -2});
    // twisting by mu then by nu is twisting by mu + nu
    RootOfUnity once = pi_mu_tilde(f.q, pi, mu + nu, a, b);
    RootOfUnity lhs = pi_mu_tilde(f.q, pi, mu, a, b);
    RootOfUnity extra = f.q.eval(a, nu) * f.q.eval(nu, b).inverse();
    CHECK(once == lhs * extra);
    // and at mu = 0 it is pi itself
    CHECK(pi_mu_tilde(f.q, pi, Weight::zero(2), a, b) == pi.K(a) * pi.L(b));
    CHECK(pi_mu_tilde_kl(f.q, pi, mu, f.beta) ==
          pi_mu_tilde(f.q, pi, mu, f.beta, -f.beta));
}

TEST_CASE("transport along a morphism precomposes with its inverse") {
    Fixture f;
    TorusCharacter pi = TorusCharacter::trivial(2);
    pi.k = {rot(1, 5), rot(2, 3)};
    pi.l = {rot(1, 2), rot(3, 4)};
    const Morphism& w0 = longest_element(f.hom);
    TorusCharacter moved = transport(pi, w0);
    Weight a({2, -3}), b({1, 4});
    CHECK(moved.K(a) == pi.K(w0.inv.apply(a)));
    CHECK(moved.L(b) == pi.L(w0.inv.apply(b)));
    CHECK(transport(pi, f.hom[0]) == pi);
}

TEST_CASE("scan exponents at hand-checked weights") {
    Fixture f;
    // trivial pi: the value for beta = (1,1) at mu is z^{mu_1 + mu_2}, so
    // n is the residue of mu_1 + mu_2 mod 4 (0 stays 0)
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({0, 0}), f.beta) == 0);
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({3, 3}), f.beta) == 2);
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({1, 2}), f.beta) == 3);
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({1, 3}), f.beta) == 0);
    // simple roots fire exactly on the opposite coordinate being 0 mod 4
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({0, 0}), Weight({1, 0})) == 1);
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({0, 1}), Weight({1, 0})) == 0);
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({5, 8}), Weight({1, 0})) == 1);
    CHECK(n_beta(f.q, f.rs, f.triv, Weight({4, 3}), Weight({0, 1})) == 1);

    CHECK(down(f.q, f.rs, f.triv, f.beta, Weight({3, 3})) == Weight({1, 1}));
    CHECK(down(f.q, f.rs, f.triv, f.beta, Weight({1, 3})) == Weight({1, 3}));
}

TEST_CASE("a double match means corrupted data") {
    Fixture f;
    RootSystemData broken = f.rs;
    broken.bounds[1] = 8;  // true order is 4: the scan now matches twice
    CHECK_THROWS_AS(n_beta(f.q, broken, f.triv, Weight({3, 3}), f.beta), NonUnique);
}

TEST_CASE("t scan agrees with the bracket-vanishing form") {
    Fixture f;
    for (long long x = -4; x <= 4; ++x)
        for (long long y = -4; y <= 4; ++y) {
            Weight mu({x, y});
            for (const Weight& beta : f.rs.positive_roots) {
                CHECK(t_beta(f.q, f.rs, f.triv, mu, beta) ==
                      t_beta_via_bracket(f.q, f.rs, f.triv, mu, beta));
            }
        }
}

TEST_CASE("strongly linked sets carry replayable chains") {
    Fixture f;
    // beta-arrows with n = 2 from (3,3): the next hop (-3,-3) already leaves
    // the box [mu - beta_top, mu] and is pruned
    auto linked = strongly_linked_set(f.q, f.rs, f.triv, Weight({3, 3}));
    REQUIRE(linked.size() == 3);
    CHECK(linked[0].lambda == Weight({3, 3}));
    CHECK(linked[1].lambda == Weight({1, 1}));
    CHECK(linked[2].lambda == Weight({-1, -1}));
    CHECK(linked[2].chain ==
          std::vector<std::pair<Weight, long long>>({{f.beta, 2}, {f.beta, 2}}));
    // every member stays in the box [mu - beta_top, mu]
    for (const auto& lw : linked) {
        CHECK(leq(Weight({3, 3}) - f.rs.beta_top, lw.lambda));
        CHECK(leq(lw.lambda, Weight({3, 3})));
    }
    // typical weights are alone
    CHECK(strongly_linked_set(f.q, f.rs, f.triv, Weight({1, 3})).size() == 1);
}

TEST_CASE("weight boxes enumerate lexicographically") {
    WeightBox box{Weight({0, 0}), Weight({1, 2})};
    CHECK(box.cardinality() == 6);
    std::vector<Weight> seen;
    box.for_each([&](const Weight& w) { seen.push_back(w); });
    CHECK(seen.size() == 6);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(seen.front() == Weight({0, 0}));
    CHECK(seen.back() == Weight({1, 2}));
    CHECK(box.contains(Weight({1, 1})));
    CHECK_FALSE(box.contains(Weight({2, 0})));

    WeightBox empty{Weight({1, 0}), Weight({0, 5})};
    CHECK(empty.cardinality() == 0);
    empty.for_each([&](const Weight&) { CHECK(false); });
}

TEST_CASE("default block window") {
    Fixture f;
    WeightBox w = default_block_window(f.rs, Weight({1, 2}));
    CHECK(w.lo == Weight({1, 2}) - f.rs.beta_top * 2);
    CHECK(w.hi == Weight({1, 2}) + f.rs.beta_top);
}

TEST_CASE("linkage classes partition the window") {
    Fixture f;
    WeightBox window{Weight({-4, -4}), Weight({3, 3})};
    auto classes = linkage_classes(f.q, f.rs, f.triv, window);
    size_t total = 0;
    std::set<Weight> all;
    for (const auto& cls : classes) {
        CHECK(std::is_sorted(cls.begin(), cls.end()));
        total += cls.size();
        for (const Weight& w : cls) {
            CHECK(window.contains(w));
            CHECK(all.insert(w).second);
        }
    }
    CHECK(total == window.cardinality());
    CHECK(std::is_sorted(classes.begin(), classes.end(),
                         [](const auto& a, const auto& b) { return a.front() < b.front(); }));

    // weights joined by a down-arrow share a class
    auto class_of = [&](const Weight& w) -> int {
        for (size_t c = 0; c < classes.size(); ++c)
            if (std::find(classes[c].begin(), classes[c].end(), w) != classes[c].end())
                return static_cast<int>(c);
        return -1;
    };
    CHECK(class_of(Weight({3, 3})) == class_of(Weight({1, 1})));
    CHECK(class_of(Weight({3, 3})) == class_of(Weight({-3, -3})));
    CHECK(class_of(Weight({0, 0})) == class_of(Weight({-1, 0})));  // via alpha_1, n = 1
}

TEST_CASE("atypicality bookkeeping") {
    Fixture f;
    Atypicality typ = atypicality(f.q, f.rs, f.triv, Weight({1, 3}));
    CHECK(typ.degree == 0);
    CHECK(typ.typical());
    CHECK(typ.verma_is_simple());
    CHECK(typ.zero_roots.empty());

    Atypicality one = atypicality(f.q, f.rs, f.triv, Weight({3, 3}));
    CHECK(one.degree == 1);
    CHECK(one.zero_roots == std::vector<Weight>({f.beta}));

    // (0,0): both simple roots fire alongside beta staying regular
    Atypicality two = atypicality(f.q, f.rs, f.triv, Weight({0, 0}));
    CHECK(two.degree == 2);
    CHECK(two.zero_roots == std::vector<Weight>({Weight({1, 0}), Weight({0, 1})}));

    for (const Weight mu : {Weight({1, 3}), Weight({3, 3}), Weight({0, 0})}) {
        Atypicality a = atypicality(f.q, f.rs, f.triv, mu);
        Atypicality b = atypicality_via_factors(f.q, f.rs, f.triv, mu);
        CHECK(a.degree == b.degree);
        CHECK(a.zero_roots == b.zero_roots);
    }
}
