#pragma once

// Reusable property checks over a braiding matrix: the cross-checks behind
// the `verify` subcommand and the acceptance gate.  Each check returns pass
// plus a short human-readable detail line; randomized checks take an explicit
// seed and sample count, and identical inputs give identical runs.

#include <cstdint>
#include <random>

#include "qweyl/characters.hpp"
#include "qweyl/dotaction.hpp"

namespace qweyl {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Deterministic across platforms: raw mt19937_64 draws reduced by modulus.
// The engine is pinned by the standard; library distributions are not, so
// none are used.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : gen_(seed) {}
    uint64_t next() { return gen_(); }
    long long range(long long lo, long long hi);  // inclusive
    Weight weight(size_t theta, long long lo, long long hi);
    RootOfUnity root_of_unity();
    TorusCharacter torus_character(size_t theta, bool force_nontrivial);

private:
    std::mt19937_64 gen_;
};

// Bundled per-object data so checks do not recompute orbits.
struct ObjectContext {
    Groupoid groupoid;
    std::vector<std::vector<Morphism>> homs;        // per object
    std::vector<RootSystemData> systems;            // per object
    int base = 0;

    const RootSystemData& base_system() const { return systems[base]; }
    const std::vector<Morphism>& base_hom() const { return homs[base]; }
    const BraidingMatrix& base_matrix() const { return groupoid.object(base); }
};

ObjectContext make_context(const BraidingMatrix& q);

// Reduced-word roots equal the sweep oracle on every orbit object; bounds
// transport along morphisms; lengths match the root-counting formula; the
// longest element maps beta_top of its source to -beta_top.
Outcome check_roots_oracle(const ObjectContext& ctx);

// ch of the plain Verma equals ch of every twisted Verma at the shifted
// weight, for `samples` random mu.
Outcome check_master_identity(const ObjectContext& ctx, uint64_t seed, int samples);

// n_beta at mu equals t_beta at the shifted weight of the root's stored
// presentation, for trivial pi plus `extra_pis` random nontrivial ones.
Outcome check_n_equals_t(const ObjectContext& ctx, uint64_t seed, int mu_samples,
                         int extra_pis);

// typical <=> every n_beta = 0 <=> ch_simple_typical succeeds, and the
// bracket-vanishing factor path agrees root for root.
Outcome check_typicality_paths(const ObjectContext& ctx, uint64_t seed, int samples);

// Strongly linked sets stay inside [mu - beta_top, mu] and every member's
// witness chain replays.
Outcome check_window_and_chains(const ObjectContext& ctx, uint64_t seed, int samples);

// Every Cartan positive root admits the affine-reflection match of its
// down-arrow (trivial pi), re-verified through dot_reflect, and satisfies the
// delta-shift rewrite.  strict: any half-integral or unmet-precondition throw
// fails the check; otherwise such roots are counted and skipped.
Outcome check_dot_lemma(const ObjectContext& ctx, uint64_t seed, int samples, bool strict);

// check_super_linkage over the given mus and window.
Outcome check_containment(const ObjectContext& ctx, const std::vector<Weight>& mus,
                          const WeightBox& window);

// One line per named check over a catalog entry; used by `verify`.
std::vector<std::pair<std::string, Outcome>> run_suite(const BraidingMatrix& q,
                                                       uint64_t seed);

}  // namespace qweyl
