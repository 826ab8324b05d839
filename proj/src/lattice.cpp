#include "qweyl/lattice.hpp"

#include <boost/rational.hpp>

#include <sstream>

namespace qweyl {

Weight Weight::basis(size_t theta, size_t i) {
    Weight w = zero(theta);
    w[i] = 1;
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r[i] += o[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r[i] -= o[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Weight Weight::operator*(long long k) const {
    Weight r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
}

bool Weight::is_zero() const {
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

bool Weight::nonneg() const {
    for (auto x : c_)
        if (x < 0) return false;
    return true;
}

bool Weight::nonpos() const {
    for (auto x : c_)
        if (x > 0) return false;
    return true;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << ")";
    return os.str();
}

bool leq(const Weight& lambda, const Weight& mu) {
    return (mu - lambda).nonneg();
}

LatticeAutomorphism::LatticeAutomorphism(std::vector<std::vector<long long>> m)
    : m_(std::move(m)) {
    for (const auto& row : m_)
        if (row.size() != m_.size())
            throw UsageError("lattice automorphism matrix must be square");
    long long d = det();
    if (d != 1 && d != -1)
        throw UsageError("lattice automorphism must have determinant +-1");
}

LatticeAutomorphism LatticeAutomorphism::identity(size_t theta) {
    LatticeAutomorphism a;
    a.m_.assign(theta, std::vector<long long>(theta, 0));
    for (size_t i = 0; i < theta; ++i) a.m_[i][i] = 1;
    return a;
}

Weight LatticeAutomorphism::apply(const Weight& v) const {
    Weight r = Weight::zero(theta());
    for (size_t i = 0; i < theta(); ++i)
        for (size_t j = 0; j < theta(); ++j) r[i] += m_[i][j] * v[j];
    return r;
}

LatticeAutomorphism LatticeAutomorphism::compose(const LatticeAutomorphism& o) const {
    LatticeAutomorphism r;
    size_t n = theta();
    r.m_.assign(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) r.m_[i][j] += m_[i][k] * o.m_[k][j];
    return r;
}

namespace {

using Rat = boost::rational<long long>;

// Gauss-Jordan over Q; returns false when singular.
bool invert(std::vector<std::vector<Rat>>& a, std::vector<std::vector<Rat>>& inv) {
    size_t n = a.size();
    inv.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == Rat(0)) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == Rat(0)) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return true;
}

}  // namespace

LatticeAutomorphism LatticeAutomorphism::inverse() const {
    size_t n = theta();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n)), inv;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m_[i][j]);
    if (!invert(a, inv)) throw UsageError("singular matrix has no inverse");
    LatticeAutomorphism r;
    r.m_.assign(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (inv[i][j].denominator() != 1)
                throw UsageError("inverse is not integral");
            r.m_[i][j] = inv[i][j].numerator();
        }
    return r;
}

long long LatticeAutomorphism::det() const {
    size_t n = theta();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m_[i][j]);
    Rat d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == Rat(0)) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        Rat p = a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == Rat(0)) continue;
            Rat f = a[i][col] / p;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return boost::rational_cast<long long>(d);
}

bool leq_twisted(const LatticeAutomorphism& w, const Weight& lambda, const Weight& mu) {
    return w.inverse().apply(mu - lambda).nonneg();
}

}  // namespace qweyl
