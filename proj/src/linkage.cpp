#include "qweyl/linkage.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qweyl {

RootOfUnity TorusCharacter::K(const Weight& a) const {
    RootOfUnity r;
    for (size_t i = 0; i < k.size(); ++i) r = r * k[i].pow(a[i]);
    return r;
}

RootOfUnity TorusCharacter::L(const Weight& b) const {
    RootOfUnity r;
    for (size_t i = 0; i < l.size(); ++i) r = r * l[i].pow(b[i]);
    return r;
}

bool TorusCharacter::is_trivial() const {
    for (const auto& x : k)
        if (!x.is_one()) return false;
    for (const auto& x : l)
        if (!x.is_one()) return false;
    return true;
}

RootOfUnity pi_mu_tilde(const BraidingMatrix& q, const TorusCharacter& pi, const Weight& mu,
                        const Weight& a, const Weight& b) {
    return q.eval(a, mu) * q.eval(mu, b).inverse() * pi.K(a) * pi.L(b);
}

RootOfUnity pi_mu_tilde_kl(const BraidingMatrix& q, const TorusCharacter& pi,
                           const Weight& mu, const Weight& beta) {
    return pi_mu_tilde(q, pi, mu, beta, -beta);
}

RootOfUnity rho(const BraidingMatrix& q, const Weight& beta) {
    RootOfUnity r;
    for (size_t i = 0; i < q.theta(); ++i) r = r * q.at(i, i).pow(beta[i]);
    return r;
}

TorusCharacter transport(const TorusCharacter& pi, const Morphism& w) {
    size_t theta = pi.theta();
    TorusCharacter out = TorusCharacter::trivial(theta);
    for (size_t i = 0; i < theta; ++i) {
        Weight pre = w.inv.apply(Weight::basis(theta, i));
        out.k[i] = pi.K(pre);
        out.l[i] = pi.L(pre);
    }
    return out;
}

namespace {

long long unique_scan(long long b, const std::function<bool(long long)>& hit,
                      const char* what) {
    long long found = 0;
    for (long long n = 1; n < b; ++n) {
        if (!hit(n)) continue;
        if (found != 0)
            throw NonUnique(std::string(what) + " matched at " + std::to_string(found) +
                            " and " + std::to_string(n));
        found = n;
    }
    return found;
}

}  // namespace

long long n_beta(const BraidingMatrix& q, const RootSystemData& rs, const TorusCharacter& pi,
                 const Weight& mu, const Weight& beta) {
    long long b = rs.bound_of(beta);
    RootOfUnity qb = q.eval(beta, beta);
    RootOfUnity target = rho(q, beta) * pi_mu_tilde_kl(q, pi, mu, beta);
    return unique_scan(
        b, [&](long long n) { return qb.pow(n) == target; }, "n_beta");
}

long long t_beta(const BraidingMatrix& q, const RootSystemData& rs, const TorusCharacter& pi,
                 const Weight& mu, const Weight& beta) {
    long long b = rs.bound_of(beta);
    RootOfUnity qb = q.eval(beta, beta);
    RootOfUnity value = pi_mu_tilde_kl(q, pi, mu, beta);
    return unique_scan(
        b, [&](long long t) { return (qb.pow(1 - t) * value).is_one(); }, "t_beta");
}

long long t_beta_via_bracket(const BraidingMatrix& q, const RootSystemData& rs,
                             const TorusCharacter& pi, const Weight& mu, const Weight& beta) {
    long long b = rs.bound_of(beta);
    RootOfUnity qb = q.eval(beta, beta);
    RootOfUnity value = pi_mu_tilde_kl(q, pi, mu, beta);
    return unique_scan(
        b,
        [&](long long t) {
            return quantum_number_is_zero(t, qb) || (qb.pow(1 - t) * value).is_one();
        },
        "t_beta_via_bracket");
}

Weight down(const BraidingMatrix& q, const RootSystemData& rs, const TorusCharacter& pi,
            const Weight& beta, const Weight& mu) {
    return mu - beta * n_beta(q, rs, pi, mu, beta);
}

std::vector<LinkedWeight> strongly_linked_set(const BraidingMatrix& q,
                                              const RootSystemData& rs,
                                              const TorusCharacter& pi, const Weight& mu) {
    // Down-arrows only lower coordinates, so pruning to the box as we go
    // loses nothing: a weight that leaves it can never come back.
    Weight floor = mu - rs.beta_top;
    std::vector<LinkedWeight> out{LinkedWeight{mu, {}}};
    std::map<Weight, bool> seen{{mu, true}};
    for (size_t head = 0; head < out.size(); ++head) {
        const LinkedWeight cur = out[head];  // copy: out grows below
        for (const auto& beta : rs.positive_roots) {
            long long n = n_beta(q, rs, pi, cur.lambda, beta);
            if (n == 0) continue;
            Weight next = cur.lambda - beta * n;
            if (!leq(floor, next)) continue;
            if (seen.emplace(next, true).second) {
                LinkedWeight lw{next, cur.chain};
                lw.chain.emplace_back(beta, n);
                out.push_back(std::move(lw));
            }
        }
    }
    return out;
}

void WeightBox::for_each(const std::function<void(const Weight&)>& f) const {
    if (!leq(lo, hi)) return;
    size_t theta = lo.theta();
    Weight cur = lo;
    while (true) {
        f(cur);
        size_t i = theta;
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                for (size_t j = i + 1; j < theta; ++j) cur[j] = lo[j];
                break;
            }
            if (i == 0) return;
        }
    }
}

size_t WeightBox::cardinality() const {
    size_t n = 1;
    for (size_t i = 0; i < lo.theta(); ++i)
        n *= static_cast<size_t>(hi[i] - lo[i] + 1);
    return n;
}

WeightBox default_block_window(const RootSystemData& rs, const Weight& mu) {
    return WeightBox{mu - rs.beta_top * 2, mu + rs.beta_top};
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<Weight>> linkage_classes(const BraidingMatrix& q,
                                                 const RootSystemData& rs,
                                                 const TorusCharacter& pi,
                                                 const WeightBox& window) {
    std::vector<Weight> points;
    window.for_each([&](const Weight& w) { points.push_back(w); });
    std::map<Weight, int> index;
    for (size_t i = 0; i < points.size(); ++i) index.emplace(points[i], static_cast<int>(i));

    UnionFind uf(points.size());
    for (size_t i = 0; i < points.size(); ++i)
        for (const auto& beta : rs.positive_roots) {
            long long n = n_beta(q, rs, pi, points[i], beta);
            if (n == 0) continue;
            auto it = index.find(points[i] - beta * n);
            if (it != index.end()) uf.unite(static_cast<int>(i), it->second);
        }

    std::map<int, std::vector<Weight>> grouped;
    for (size_t i = 0; i < points.size(); ++i)
        grouped[uf.find(static_cast<int>(i))].push_back(points[i]);
    std::vector<std::vector<Weight>> out;
    for (auto& [root, members] : grouped) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

Atypicality atypicality(const BraidingMatrix& q, const RootSystemData& rs,
                        const TorusCharacter& pi, const Weight& mu) {
    Atypicality a;
    for (const auto& beta : rs.positive_roots)
        if (n_beta(q, rs, pi, mu, beta) != 0) {
            ++a.degree;
            a.zero_roots.push_back(beta);
        }
    return a;
}

Atypicality atypicality_via_factors(const BraidingMatrix& q, const RootSystemData& rs,
                                    const TorusCharacter& pi, const Weight& mu) {
    Atypicality a;
    for (size_t idx = 0; idx < rs.positive_roots.size(); ++idx) {
        const Weight& beta = rs.positive_roots[idx];
        const RootPresentation& pres = rs.presentations[idx];
        Weight shifted = shift(rs, pres.w, mu);
        if (t_beta_via_bracket(q, rs, pi, shifted, beta) != 0) {
            ++a.degree;
            a.zero_roots.push_back(beta);
        }
    }
    return a;
}

}  // namespace qweyl
