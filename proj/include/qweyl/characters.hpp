#pragma once

// Formal characters: finitely supported Z-linear combinations of e^mu,
// mu in Z^I, always kept fully expanded with terms in lexicographic order.

#include <map>

#include "qweyl/linkage.hpp"

namespace qweyl {

class FormalCharacter {
public:
    FormalCharacter() = default;

    static FormalCharacter monomial(const Weight& mu, long long coeff = 1);

    const std::map<Weight, long long>& terms() const { return terms_; }
    long long coefficient(const Weight& mu) const;
    long long coefficient_sum() const;  // total dimension for genuine characters
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    FormalCharacter operator+(const FormalCharacter& o) const;
    FormalCharacter operator-(const FormalCharacter& o) const;
    FormalCharacter operator*(const FormalCharacter& o) const;

    FormalCharacter bar() const;  // e^mu -> e^{-mu}
    FormalCharacter twist(const LatticeAutomorphism& w) const;  // e^mu -> e^{w mu}

    bool operator==(const FormalCharacter& o) const = default;

    std::string str() const;  // "c1*e(mu1) + c2*e(mu2) + ..." in term order

private:
    void add_term(const Weight& mu, long long coeff);
    std::map<Weight, long long> terms_;  // no zero coefficients stored
};

// 1 + e^{-beta} + ... + e^{-(len-1) beta}.
FormalCharacter geometric_steps(const Weight& beta, long long len);

// prod over positive roots of (1 + e^{-beta} + ... + e^{(1-b(beta)) beta});
// coefficient sum is prod b(beta) and the lowest term is e^{-beta_top}.
FormalCharacter ch_negative_part(const RootSystemData& rs);

// e^mu * ch_negative_part.
FormalCharacter ch_verma(const RootSystemData& rs, const Weight& mu);

// Twisted version for a morphism w into the object of rs: positive roots the
// inverse of w keeps positive contribute descending columns, flipped ones
// ascending columns.  Computed directly from that splitting, not from the
// shift identity, so the two can be checked against each other.
FormalCharacter ch_twisted_verma(const RootSystemData& rs, const Morphism& w,
                                 const Weight& mu);

// Simple character when mu is typical (degree 0): the Verma character.
// NotTypical otherwise.
FormalCharacter ch_simple_typical(const BraidingMatrix& q, const RootSystemData& rs,
                                  const TorusCharacter& pi, const Weight& mu);

// Simple character when the atypicality degree is exactly 1:
// e^mu (1 + e^{-beta} + ... + e^{(1-n) beta}) prod_{gamma != beta} (column of
// length b(gamma)), with beta the unique zero root and n = n_beta(mu).
// WrongAtypicality otherwise.
FormalCharacter ch_simple_1atypical(const BraidingMatrix& q, const RootSystemData& rs,
                                    const TorusCharacter& pi, const Weight& mu);

// Character of the kernel of the standard map out of the twisted Verma with
// parameters (w, beta = w(alpha_i), t, mu): e^mu times the beta-column
// truncated to exponents -t..(1-b(beta)) times the same split product as
// ch_twisted_verma over the remaining roots.
FormalCharacter ch_kernel_phi(const RootSystemData& rs, const Morphism& w,
                              const Weight& beta, long long t, const Weight& mu);

}  // namespace qweyl
