#pragma once

// Positive roots of one groupoid object, read off a reduced word of the
// longest element: the nu-th root is the image of alpha_{i_nu} under the
// length-(nu-1) prefix of w0.  Everything downstream (bounds, beta_top,
// shifts, Cartan roots) hangs off this data.

#include <set>

#include "qweyl/groupoid.hpp"

namespace qweyl {

struct RootPresentation {
    Morphism w;  // root = w(alpha_simple), alpha_simple at the source of w
    int simple = 0;
};

struct RootSystemData {
    int object = 0;
    Morphism w0;
    std::vector<Weight> positive_roots;     // reduced-word order
    std::vector<long long> bounds;          // b(beta), parallel to positive_roots
    Weight beta_top;                        // sum (b(beta) - 1) beta
    std::vector<bool> is_cartan;            // parallel to positive_roots
    std::vector<RootPresentation> presentations;  // shortest presentation per root

    size_t theta() const { return beta_top.theta(); }
    int root_index(const Weight& beta) const;
    long long bound_of(const Weight& beta) const;
    bool cartan(const Weight& beta) const { return is_cartan[checked_index(beta)]; }
    const RootPresentation& presentation(const Weight& beta) const {
        return presentations[checked_index(beta)];
    }
    int checked_index(const Weight& beta) const;
};

// Needs the full hom set with this object as target (from hom_into).
RootSystemData compute_root_system(const Groupoid& g, int object,
                                   const std::vector<Morphism>& hom);

// Independent enumeration: { w(alpha_i) : w in hom, i simple } ∩ Z_{>=0}^I.
// Must coincide with the reduced-word roots as a set.
std::set<Weight> positive_roots_oracle(const Groupoid& g, const std::vector<Morphism>& hom);

// mu<w> = mu - sum (b(beta) - 1) beta over the positive roots beta of the
// target that w^{-1} sends negative.  All-integer; no half-integer rho is
// ever formed.
Weight shift(const RootSystemData& rs_target, const Morphism& w, const Weight& mu);

// 2 * varrho = beta_top.
inline const Weight& two_varrho(const RootSystemData& rs) { return rs.beta_top; }

// Vertex i of p with p_ii^{c_ij} = p_ij p_ji for every j.
bool is_cartan_vertex(const BraidingMatrix& p, size_t i);

// Root system of every object, each via its own hom set.  Index = object.
std::vector<RootSystemData> root_systems_for_all_objects(
    const Groupoid& g, size_t morphism_cap = kDefaultMorphismCap);

// One Cartan matrix and one positive-root set shared by all objects.
struct StandardBundle {
    std::vector<std::vector<long long>> cartan;
    std::vector<Weight> positive_roots;
};

bool is_standard_type(const Groupoid& g, const std::vector<RootSystemData>& all_systems);

// NotStandardType unless is_standard_type holds.
StandardBundle require_standard_type(const Groupoid& g,
                                     const std::vector<RootSystemData>& all_systems);

}  // namespace qweyl
