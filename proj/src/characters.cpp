#include "qweyl/characters.hpp"

#include <sstream>

namespace qweyl {

FormalCharacter FormalCharacter::monomial(const Weight& mu, long long coeff) {
    FormalCharacter c;
    c.add_term(mu, coeff);
    return c;
}

long long FormalCharacter::coefficient(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
}

long long FormalCharacter::coefficient_sum() const {
    long long s = 0;
    for (const auto& [mu, c] : terms_) s += c;
    return s;
}

void FormalCharacter::add_term(const Weight& mu, long long coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(mu, coeff);
    if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
}

FormalCharacter FormalCharacter::operator+(const FormalCharacter& o) const {
    FormalCharacter r = *this;
    for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
    return r;
}

FormalCharacter FormalCharacter::operator-(const FormalCharacter& o) const {
    FormalCharacter r = *this;
    for (const auto& [mu, c] : o.terms_) r.add_term(mu, -c);
    return r;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& o) const {
    FormalCharacter r;
    for (const auto& [mu, c] : terms_)
        for (const auto& [nu, d] : o.terms_) r.add_term(mu + nu, c * d);
    return r;
}

FormalCharacter FormalCharacter::bar() const {
    FormalCharacter r;
    for (const auto& [mu, c] : terms_) r.add_term(-mu, c);
    return r;
}

FormalCharacter FormalCharacter::twist(const LatticeAutomorphism& w) const {
    FormalCharacter r;
    for (const auto& [mu, c] : terms_) r.add_term(w.apply(mu), c);
    return r;
}

std::string FormalCharacter::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*e" << mu.str();
    }
    return os.str();
}

FormalCharacter geometric_steps(const Weight& beta, long long len) {
    FormalCharacter r;
    Weight acc = Weight::zero(beta.theta());
    for (long long k = 0; k < len; ++k) {
        r = r + FormalCharacter::monomial(acc);
        acc = acc - beta;
    }
    return r;
}

FormalCharacter ch_negative_part(const RootSystemData& rs) {
    FormalCharacter r = FormalCharacter::monomial(Weight::zero(rs.theta()));
    for (size_t i = 0; i < rs.positive_roots.size(); ++i)
        r = r * geometric_steps(rs.positive_roots[i], rs.bounds[i]);
    return r;
}

FormalCharacter ch_verma(const RootSystemData& rs, const Weight& mu) {
    return FormalCharacter::monomial(mu) * ch_negative_part(rs);
}

namespace {

// Split product over positive roots of the target, skipping `skip` (-1 for
// none): descending column when w^{-1} keeps the root positive, ascending
// when it flips it.
FormalCharacter split_product(const RootSystemData& rs, const Morphism& w, int skip) {
    FormalCharacter r = FormalCharacter::monomial(Weight::zero(rs.theta()));
    for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        const Weight& gamma = rs.positive_roots[i];
        if (w.inv.apply(gamma).nonpos())
            r = r * geometric_steps(-gamma, rs.bounds[i]);
        else
            r = r * geometric_steps(gamma, rs.bounds[i]);
    }
    return r;
}

}  // namespace

FormalCharacter ch_twisted_verma(const RootSystemData& rs, const Morphism& w,
                                 const Weight& mu) {
    return FormalCharacter::monomial(mu) * split_product(rs, w, -1);
}

FormalCharacter ch_simple_typical(const BraidingMatrix& q, const RootSystemData& rs,
                                  const TorusCharacter& pi, const Weight& mu) {
    Atypicality a = atypicality(q, rs, pi, mu);
    if (!a.typical())
        throw NotTypical("atypicality degree " + std::to_string(a.degree) + " at " +
                         mu.str());
    return ch_verma(rs, mu);
}

FormalCharacter ch_simple_1atypical(const BraidingMatrix& q, const RootSystemData& rs,
                                    const TorusCharacter& pi, const Weight& mu) {
    Atypicality a = atypicality(q, rs, pi, mu);
    if (a.degree != 1)
        throw WrongAtypicality("atypicality degree " + std::to_string(a.degree) + " at " +
                               mu.str() + ", need exactly 1");
    const Weight& beta = a.zero_roots.front();
    long long n = n_beta(q, rs, pi, mu, beta);
    FormalCharacter r = FormalCharacter::monomial(mu) * geometric_steps(beta, n);
    for (size_t i = 0; i < rs.positive_roots.size(); ++i)
        if (rs.positive_roots[i] != beta)
            r = r * geometric_steps(rs.positive_roots[i], rs.bounds[i]);
    return r;
}

FormalCharacter ch_kernel_phi(const RootSystemData& rs, const Morphism& w,
                              const Weight& beta, long long t, const Weight& mu) {
    int idx = rs.checked_index(beta);
    long long b = rs.bounds[idx];
    if (t < 1 || t >= b)
        throw PreconditionUnmet("kernel parameter t = " + std::to_string(t) +
                                " outside 1.." + std::to_string(b - 1));
    if (!w.inv.apply(beta).nonneg())
        throw PreconditionUnmet("beta must stay positive under the inverse of w");
    // Column e^{-t beta} + ... + e^{(1-b) beta}: b - t terms.
    FormalCharacter column =
        FormalCharacter::monomial(beta * (-t)) * geometric_steps(beta, b - t);
    return FormalCharacter::monomial(mu) * column * split_product(rs, w, idx);
}

}  // namespace qweyl
