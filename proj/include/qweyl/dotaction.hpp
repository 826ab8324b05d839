#pragma once

// Affine dot action on standard-type bundles.  All arithmetic runs in
// doubled coordinates (2*mu, beta_top instead of the half-integral varrho);
// results are halved at the very end and an odd coordinate is an error, never
// a rounding.
//
// Ops that only make sense on standard type take a StandardBundle, which can
// only be obtained through require_standard_type.

#include "qweyl/linkage.hpp"

namespace qweyl {

// <beta_vee, v> via the stored presentation beta = w(alpha_i):
// <alpha_i_vee, w^{-1} v> with the bundle's (constant) Cartan matrix.
long long coroot_pairing(const StandardBundle& bundle, const RootSystemData& rs,
                         const Weight& beta, const Weight& v);

// Same value computed from every presentation of beta in the hom set;
// PresentationMismatch if any two disagree.
long long coroot_pairing_verified(const Groupoid& g, const std::vector<Morphism>& hom,
                                  const StandardBundle& bundle, const RootSystemData& rs,
                                  const Weight& beta, const Weight& v);

// s_beta(v) = v - <beta_vee, v> beta.
Weight reflect_by_root(const StandardBundle& bundle, const RootSystemData& rs,
                       const Weight& beta, const Weight& v);

// s_{beta,m} • mu = s_beta(mu + m b(beta) beta - varrho) + varrho.
// HalfIntegerResult if the doubled result has an odd coordinate.
Weight dot_reflect(const StandardBundle& bundle, const RootSystemData& rs,
                   const Weight& beta, long long m, const Weight& mu);

// The integer m with beta↓mu = s_{beta,m} • mu.  Requires trivial pi
// (PreconditionUnmet otherwise); for Cartan beta such an m always exists,
// for other roots the search may fail: NoSuchM.  The returned m is
// re-verified through dot_reflect before being handed back.
long long match_down_to_dot(const BraidingMatrix& q, const RootSystemData& rs,
                            const StandardBundle& bundle, const TorusCharacter& pi,
                            const Weight& beta, const Weight& mu);

struct SuperLinkageReport {
    bool holds = true;
    std::string detail;  // counterexample description when !holds
};

// Checks that every member of the windowed linkage class of mu lies in the
// dot orbit of mu + (lattice of non-Cartan roots) under the affine
// reflections of Cartan roots, searching dot images inside the window.
SuperLinkageReport check_super_linkage(const BraidingMatrix& q, const RootSystemData& rs,
                                       const StandardBundle& bundle,
                                       const TorusCharacter& pi, const Weight& mu,
                                       const WeightBox& window);

// Identity rewriting the dot action through the plain half-sum delta:
//   s_beta • mu = s_beta(mu + delta) - delta + b <beta_vee, delta_car> beta,
// where delta runs over all positive roots when every root is Cartan, and
// over (Cartan half-sum) - (non-Cartan half-sum) otherwise (beta then must be
// Cartan).  Needs one common b on the Cartan class: PreconditionUnmet if the
// bounds differ there, or if beta is not Cartan in the mixed case.
bool delta_shift_identity(const RootSystemData& rs, const StandardBundle& bundle,
                          const Weight& beta, const Weight& mu);

}  // namespace qweyl
