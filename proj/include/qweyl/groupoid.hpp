#pragma once

// The reflection groupoid of a braiding matrix: objects are the matrices in
// the closure of the start matrix under r_1..r_theta, morphisms are products
// of simple reflections between them.
//
// Word convention, used everywhere: words are target-anchored.  A morphism
// with word (i1,...,ik) is the composite sigma_{i1} ∘ ... ∘ sigma_{ik} read
// from the target, so its object chain is
//   target, r_{i1}(target), r_{i2}r_{i1}(target), ..., source,
// its matrix is the product S_{i1} S_{i2} ... S_{ik} of the reflections taken
// along that chain, and extending a morphism multiplies a new generator on
// the source side (word append).  Two words name the same morphism exactly
// when source object and matrix agree.

#include <vector>

#include "qweyl/braiding.hpp"

namespace qweyl {

inline constexpr size_t kDefaultObjectCap = 10000;
inline constexpr size_t kDefaultMorphismCap = 1000000;

struct GroupoidEdge {
    int from = 0;
    int gen = 0;
    int to = 0;
};

class Groupoid {
public:
    // BFS closure from q; discovery order is deterministic (queue order,
    // generators in index order).  Object 0 is q itself.
    static Groupoid orbit(const BraidingMatrix& q, size_t object_cap = kDefaultObjectCap);

    size_t theta() const { return theta_; }
    size_t size() const { return objects_.size(); }
    const std::vector<BraidingMatrix>& objects() const { return objects_; }
    const BraidingMatrix& object(int i) const { return objects_[i]; }
    int base() const { return 0; }

    // Index of r_gen(object i).
    int neighbor(int i, int gen) const { return neighbors_[i][gen]; }

    // sigma_gen at object i (equal at both ends of the edge).
    const LatticeAutomorphism& reflection(int i, int gen) const {
        return reflections_[i][gen];
    }

    // Each unordered edge once, smaller object index first.
    std::vector<GroupoidEdge> edges() const;

private:
    size_t theta_ = 0;
    std::vector<BraidingMatrix> objects_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<std::vector<LatticeAutomorphism>> reflections_;
};

struct Morphism {
    int source = 0;
    int target = 0;
    LatticeAutomorphism map;
    LatticeAutomorphism inv;        // maintained alongside map
    std::vector<int> word;          // target-anchored, see above

    size_t length() const { return word.size(); }
    bool is_identity() const { return word.empty(); }
};

// All morphisms with the given target, including the identity.  BFS over
// right multiplication by generators; morphisms are deduplicated by
// (source, matrix), and each keeps the first (hence shortest) word found.
// Order: by length, then discovery order — deterministic.
std::vector<Morphism> hom_into(const Groupoid& g, int target,
                               size_t morphism_cap = kDefaultMorphismCap);

// The unique maximal-length element of a hom set; AmbiguousLongest if the
// maximum is attained twice.
const Morphism& longest_element(const std::vector<Morphism>& hom);

// The morphism into `target` spelled by a target-anchored word (not
// necessarily reduced).  UsageError on out-of-range generators.
Morphism morphism_from_word(const Groupoid& g, int target, const std::vector<int>& word);

// |w(positive roots of the source) ∩ (negative roots of the target)|.
size_t length_by_roots(const Morphism& w, const std::vector<Weight>& src_positive,
                       const std::vector<Weight>& tgt_positive);

}  // namespace qweyl
