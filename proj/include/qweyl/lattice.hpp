#pragma once

// The weight lattice Z^I and its unimodular automorphisms.  Coordinates are
// machine integers; every map in sight is a product of simple reflections, so
// entries stay tiny compared to the 64-bit range.

#include <string>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<long long> c) : c_(std::move(c)) {}

    static Weight zero(size_t theta) { return Weight(std::vector<long long>(theta, 0)); }
    static Weight basis(size_t theta, size_t i);

    size_t theta() const { return c_.size(); }
    long long operator[](size_t i) const { return c_[i]; }
    long long& operator[](size_t i) { return c_[i]; }
    const std::vector<long long>& coords() const { return c_; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(long long k) const;

    bool operator==(const Weight& o) const = default;
    bool operator!=(const Weight& o) const = default;
    bool operator<(const Weight& o) const { return c_ < o.c_; }  // lexicographic

    bool is_zero() const;
    bool nonneg() const;  // all coordinates >= 0
    bool nonpos() const;

    std::string str() const;  // "(c1,...,ck)"

private:
    std::vector<long long> c_;
};

// Componentwise dominance: lambda <= mu iff mu - lambda has nonnegative
// coordinates.
bool leq(const Weight& lambda, const Weight& mu);

class LatticeAutomorphism {
public:
    LatticeAutomorphism() = default;
    explicit LatticeAutomorphism(std::vector<std::vector<long long>> m);

    static LatticeAutomorphism identity(size_t theta);

    size_t theta() const { return m_.size(); }
    long long at(size_t i, size_t j) const { return m_[i][j]; }
    const std::vector<std::vector<long long>>& rows() const { return m_; }

    Weight apply(const Weight& v) const;
    // this ∘ o: apply o first.
    LatticeAutomorphism compose(const LatticeAutomorphism& o) const;
    LatticeAutomorphism inverse() const;
    long long det() const;

    bool operator==(const LatticeAutomorphism& o) const = default;
    bool operator<(const LatticeAutomorphism& o) const { return m_ < o.m_; }

private:
    std::vector<std::vector<long long>> m_;
};

// lambda <=_w mu iff w^{-1}(mu - lambda) has nonnegative coordinates.
bool leq_twisted(const LatticeAutomorphism& w, const Weight& lambda, const Weight& mu);

}  // namespace qweyl
