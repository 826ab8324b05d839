#include "qweyl/braiding.hpp"

#include <sstream>

namespace qweyl {

BraidingMatrix::BraidingMatrix(size_t theta, std::vector<RootOfUnity> entries)
    : theta_(theta), entries_(std::move(entries)) {
    if (entries_.size() != theta_ * theta_)
        throw UsageError("braiding matrix needs theta^2 entries");
    if (theta_ == 0) throw UsageError("braiding matrix needs theta >= 1");
}

RootOfUnity BraidingMatrix::eval(const Weight& a, const Weight& b) const {
    // Sum of exponents a_i b_j * arg(q_ij) in Q/Z.
    RootOfUnity r;
    for (size_t i = 0; i < theta_; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < theta_; ++j) {
            if (b[j] == 0) continue;
            r = r * at(i, j).pow(Int(a[i]) * b[j]);
        }
    }
    return r;
}

std::optional<Int> BraidingMatrix::bound(const Weight& beta) const {
    RootOfUnity qbeta = eval(beta, beta);
    if (qbeta.is_one()) return std::nullopt;  // (m)_1 = m never vanishes for m >= 1
    return qbeta.order();
}

long long BraidingMatrix::cartan_entry(size_t i, size_t j, long long cap) const {
    if (i == j) return 2;
    const RootOfUnity& qii = at(i, i);
    RootOfUnity prod = at(i, j) * at(j, i);
    if (qii.is_one()) {
        // (m+1)_1 never vanishes, so only q_ij q_ji = q_ii^{-m} = 1 can fire.
        if (prod.is_one()) return 0;
        throw NotFiniteType("no Cartan entry at (" + std::to_string(i) + "," +
                            std::to_string(j) + ") within cap " + std::to_string(cap));
    }
    Int ord = qii.order();
    RootOfUnity power;  // q_ii^m, m = 0, 1, ...
    for (Int m = 0; m < ord; ++m) {
        if (quantum_number_is_zero(m + 1, qii) || (power * prod).is_one()) {
            long long result = -static_cast<long long>(m);
            return result;
        }
        power = power * qii;
    }
    // Unreachable: m = ord - 1 zeroes the quantum number.
    throw NotFiniteType("Cartan entry scan did not terminate");
}

LatticeAutomorphism BraidingMatrix::simple_reflection(size_t i, long long cap) const {
    std::vector<std::vector<long long>> m(theta_, std::vector<long long>(theta_, 0));
    for (size_t j = 0; j < theta_; ++j) m[j][j] = 1;
    for (size_t j = 0; j < theta_; ++j) m[i][j] -= cartan_entry(i, j, cap);
    return LatticeAutomorphism(std::move(m));
}

BraidingMatrix BraidingMatrix::reflect(size_t i, long long cap) const {
    LatticeAutomorphism s = simple_reflection(i, cap);
    // sigma_i is an involution, so the dual action needs no separate inverse.
    std::vector<RootOfUnity> out(theta_ * theta_);
    for (size_t a = 0; a < theta_; ++a)
        for (size_t b = 0; b < theta_; ++b)
            out[a * theta_ + b] =
                eval(s.apply(Weight::basis(theta_, a)), s.apply(Weight::basis(theta_, b)));
    return BraidingMatrix(theta_, std::move(out));
}

BraidingMatrix BraidingMatrix::dual_action(const LatticeAutomorphism& w) const {
    LatticeAutomorphism winv = w.inverse();
    std::vector<RootOfUnity> out(theta_ * theta_);
    for (size_t a = 0; a < theta_; ++a)
        for (size_t b = 0; b < theta_; ++b)
            out[a * theta_ + b] = eval(winv.apply(Weight::basis(theta_, a)),
                                       winv.apply(Weight::basis(theta_, b)));
    return BraidingMatrix(theta_, std::move(out));
}

BraidingMatrix BraidingMatrix::transpose() const {
    std::vector<RootOfUnity> out(theta_ * theta_);
    for (size_t a = 0; a < theta_; ++a)
        for (size_t b = 0; b < theta_; ++b) out[a * theta_ + b] = at(b, a);
    return BraidingMatrix(theta_, std::move(out));
}

bool BraidingMatrix::operator<(const BraidingMatrix& o) const {
    if (theta_ != o.theta_) return theta_ < o.theta_;
    return entries_ < o.entries_;
}

std::string BraidingMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < theta_; ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < theta_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace qweyl
