#pragma once

// Linkage machinery for one groupoid object: torus characters pi on the K/L
// grading group, the values (pi mu~)(K_a L_b), the scan exponents n_beta and
// t_beta, the down-arrow beta↓mu = mu - n_beta(mu) beta, strongly linked
// sets with witness chains, windowed linkage classes, and typicality.

#include <functional>

#include "qweyl/rootsystem.hpp"

namespace qweyl {

// A character of the group generated by K_1..K_theta, L_1..L_theta, valued
// in roots of unity (the torsion part is all that linkage ever sees).
struct TorusCharacter {
    std::vector<RootOfUnity> k, l;

    static TorusCharacter trivial(size_t theta) {
        return TorusCharacter{std::vector<RootOfUnity>(theta), std::vector<RootOfUnity>(theta)};
    }

    size_t theta() const { return k.size(); }
    RootOfUnity K(const Weight& a) const;  // prod k_i^{a_i}
    RootOfUnity L(const Weight& b) const;
    bool is_trivial() const;
    bool operator==(const TorusCharacter& o) const = default;
};

// (pi mu~)(K_a L_b) = q(a, mu) q(mu, b)^{-1} pi(K_a) pi(L_b).
RootOfUnity pi_mu_tilde(const BraidingMatrix& q, const TorusCharacter& pi, const Weight& mu,
                        const Weight& a, const Weight& b);

// The recurring special value (pi mu~)(K_beta L_beta^{-1}).
RootOfUnity pi_mu_tilde_kl(const BraidingMatrix& q, const TorusCharacter& pi,
                           const Weight& mu, const Weight& beta);

// rho(beta) = prod q_ii^{beta_i}.
RootOfUnity rho(const BraidingMatrix& q, const Weight& beta);

// pi[w]: the character at the target of w induced from pi at its source,
// pi[w](K_a L_b) = pi(K_{w^{-1}a} L_{w^{-1}b}).
TorusCharacter transport(const TorusCharacter& pi, const Morphism& w);

// The unique n in 1..b-1 with q_beta^n = rho(beta) (pi mu~)(K_beta L_beta^{-1}),
// or 0 if none.  The scan cannot match twice (q_beta has order b); a double
// match would mean corrupted data and raises NonUnique.
long long n_beta(const BraidingMatrix& q, const RootSystemData& rs, const TorusCharacter& pi,
                 const Weight& mu, const Weight& beta);

// The unique t in 1..b-1 with q_beta^{1-t} (pi mu~)(K_beta L_beta^{-1}) = 1,
// or 0 if none.
long long t_beta(const BraidingMatrix& q, const RootSystemData& rs, const TorusCharacter& pi,
                 const Weight& mu, const Weight& beta);

// Same value, decided through the vanishing of (pi mu~) on the root vector
// [beta; t] written as (t)_{q_beta} L_beta (q_beta^{1-t} K_beta L_beta^{-1} - 1):
// zero iff (t)_{q_beta} = 0 or the bracketed factor kills it.  Test twin for
// t_beta.
long long t_beta_via_bracket(const BraidingMatrix& q, const RootSystemData& rs,
                             const TorusCharacter& pi, const Weight& mu, const Weight& beta);

// beta↓mu = mu - n_beta(mu) beta.
Weight down(const BraidingMatrix& q, const RootSystemData& rs, const TorusCharacter& pi,
            const Weight& beta, const Weight& mu);

struct LinkedWeight {
    Weight lambda;
    // Witness chain from mu: hops (beta, n) with each step lambda' = lambda - n beta.
    std::vector<std::pair<Weight, long long>> chain;
};

// Closure of {mu} under all down-arrows, kept inside the box
// mu - beta_top <= lambda <= mu.  mu itself is the first entry.  BFS order;
// every weight carries its discovery chain.
std::vector<LinkedWeight> strongly_linked_set(const BraidingMatrix& q,
                                              const RootSystemData& rs,
                                              const TorusCharacter& pi, const Weight& mu);

struct WeightBox {
    Weight lo, hi;
    bool contains(const Weight& w) const { return leq(lo, w) && leq(w, hi); }
    // Lexicographic enumeration; calls f on every lattice point.
    void for_each(const std::function<void(const Weight&)>& f) const;
    size_t cardinality() const;
};

WeightBox default_block_window(const RootSystemData& rs, const Weight& mu);

// Union-find over the box: lambda ~ beta↓lambda whenever both ends lie in
// the window.  Classes sorted by minimal element, members sorted.
std::vector<std::vector<Weight>> linkage_classes(const BraidingMatrix& q,
                                                 const RootSystemData& rs,
                                                 const TorusCharacter& pi,
                                                 const WeightBox& window);

struct Atypicality {
    long long degree = 0;
    std::vector<Weight> zero_roots;  // the beta with n_beta(mu) != 0
    bool typical() const { return degree == 0; }
    bool verma_is_simple() const { return degree == 0; }
};

Atypicality atypicality(const BraidingMatrix& q, const RootSystemData& rs,
                        const TorusCharacter& pi, const Weight& mu);

// Second decision path: for each root, scan the bracket-vanishing test at the
// shifted weight mu<w> of the root's stored presentation.  Agrees with
// atypicality factor for factor.
Atypicality atypicality_via_factors(const BraidingMatrix& q, const RootSystemData& rs,
                                    const TorusCharacter& pi, const Weight& mu);

}  // namespace qweyl
