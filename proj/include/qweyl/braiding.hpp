#pragma once

// A braiding matrix (q_ij) of roots of unity and the bicharacter it spans:
// q(a, b) = prod_{i,j} q_ij^{a_i b_j} on Z^I x Z^I.  This is where Cartan
// entries, simple reflections and the reflection operator r_i live.

#include <optional>
#include <vector>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/lattice.hpp"

namespace qweyl {

inline constexpr long long kDefaultCartanCap = 64;

class BraidingMatrix {
public:
    BraidingMatrix() = default;
    BraidingMatrix(size_t theta, std::vector<RootOfUnity> entries);

    size_t theta() const { return theta_; }
    const RootOfUnity& at(size_t i, size_t j) const { return entries_[i * theta_ + j]; }
    const std::vector<RootOfUnity>& entries() const { return entries_; }

    // Bicharacter value q(a, b).
    RootOfUnity eval(const Weight& a, const Weight& b) const;

    // Order of q(beta, beta); empty means infinite (q_beta = 1).
    std::optional<Int> bound(const Weight& beta) const;

    // c_ij = 2 on the diagonal; off the diagonal the least m >= 0 with
    // (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0, negated.  For q_ii != 1 the
    // scan is bounded by ord(q_ii); for q_ii = 1 only q_ij q_ji = 1 can ever
    // fire, so anything else is NotFiniteType (cap kept as a guard).
    long long cartan_entry(size_t i, size_t j, long long cap = kDefaultCartanCap) const;

    // sigma_i(alpha_j) = alpha_j - c_ij alpha_i, as a lattice map.
    LatticeAutomorphism simple_reflection(size_t i, long long cap = kDefaultCartanCap) const;

    // r_i(q)(a, b) = q(sigma_i a, sigma_i b).
    BraidingMatrix reflect(size_t i, long long cap = kDefaultCartanCap) const;

    // (w* q)(a, b) = q(w^{-1} a, w^{-1} b).
    BraidingMatrix dual_action(const LatticeAutomorphism& w) const;

    BraidingMatrix transpose() const;

    bool operator==(const BraidingMatrix& o) const = default;
    bool operator<(const BraidingMatrix& o) const;  // entry order, for dedup maps

    std::string str() const;  // rows of exponent strings

private:
    size_t theta_ = 0;
    std::vector<RootOfUnity> entries_;  // row-major
};

}  // namespace qweyl
