#pragma once

// Exact arithmetic in the torsion subgroup of the multiplicative group of an
// algebraically closed field of characteristic zero.  A root of unity
// e^{2 pi i a/N} is stored as the reduced rotation a/N in Q/Z, so products,
// inverses and powers are integer arithmetic and equality is exact.  Nothing
// here ever touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qweyl/errors.hpp"

namespace qweyl {

using Int = boost::multiprecision::cpp_int;

class RootOfUnity {
public:
    RootOfUnity() : num_(0), den_(1) {}

    // e^{2 pi i a/n}; any integers accepted, stored reduced with 0 <= a < n.
    static RootOfUnity from_fraction(Int a, Int n);

    // Accepts "a/N" or a bare integer "a" (a full turn, i.e. the identity
    // when reduced).  Throws UsageError on malformed text or zero
    // denominator.
    static RootOfUnity parse(const std::string& text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_one() const { return num_ == 0; }

    // Multiplicative order; 1 for the identity.
    const Int& order() const { return den_; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(const Int& k) const;

    bool operator==(const RootOfUnity& o) const = default;
    bool operator!=(const RootOfUnity& o) const = default;
    // Lexicographic on (den, num); only used to key ordered containers.
    bool operator<(const RootOfUnity& o) const {
        return den_ != o.den_ ? den_ < o.den_ : num_ < o.num_;
    }

    std::string str() const;  // reduced "a/N"

private:
    RootOfUnity(Int a, Int n) : num_(std::move(a)), den_(std::move(n)) {}
    Int num_, den_;
};

// Whether the quantum number (n)_x = 1 + x + ... + x^{n-1} vanishes.  The sum
// is never materialized: (n)_1 = n, and for x != 1 the sum is
// (x^n - 1)/(x - 1), zero exactly when x^n = 1.
bool quantum_number_is_zero(const Int& n, const RootOfUnity& x);

}  // namespace qweyl
