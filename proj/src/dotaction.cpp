#include "qweyl/dotaction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qweyl {

namespace {

long long pairing_from(const std::vector<std::vector<long long>>& cartan,
                       const Morphism& w, int simple, const Weight& v) {
    Weight pulled = w.inv.apply(v);
    long long s = 0;
    for (size_t j = 0; j < pulled.theta(); ++j) s += cartan[simple][j] * pulled[j];
    return s;
}

}  // namespace

long long coroot_pairing(const StandardBundle& bundle, const RootSystemData& rs,
                         const Weight& beta, const Weight& v) {
    const RootPresentation& p = rs.presentation(beta);
    return pairing_from(bundle.cartan, p.w, p.simple, v);
}

long long coroot_pairing_verified(const Groupoid& g, const std::vector<Morphism>& hom,
                                  const StandardBundle& bundle, const RootSystemData& rs,
                                  const Weight& beta, const Weight& v) {
    bool any = false;
    long long value = 0;
    for (const auto& w : hom)
        for (size_t i = 0; i < g.theta(); ++i) {
            if (w.map.apply(Weight::basis(g.theta(), i)) != beta) continue;
            long long candidate = pairing_from(bundle.cartan, w, static_cast<int>(i), v);
            if (!any) {
                any = true;
                value = candidate;
            } else if (candidate != value) {
                throw PresentationMismatch("presentations of " + beta.str() +
                                           " give pairings " + std::to_string(value) +
                                           " and " + std::to_string(candidate));
            }
        }
    if (!any) throw UsageError(beta.str() + " has no presentation in this hom set");
    if (value != coroot_pairing(bundle, rs, beta, v))
        throw PresentationMismatch("stored presentation of " + beta.str() +
                                   " disagrees with the hom sweep");
    return value;
}

Weight reflect_by_root(const StandardBundle& bundle, const RootSystemData& rs,
                       const Weight& beta, const Weight& v) {
    return v - beta * coroot_pairing(bundle, rs, beta, v);
}

namespace {

// Doubled-coordinate core of the dot action: s_beta(2mu + 2mb beta -
// beta_top) + beta_top.
Weight dot_reflect_doubled(const StandardBundle& bundle, const RootSystemData& rs,
                           const Weight& beta, long long m, const Weight& mu) {
    long long b = rs.bound_of(beta);
    Weight arg = mu * 2 + beta * (2 * m * b) - rs.beta_top;
    return reflect_by_root(bundle, rs, beta, arg) + rs.beta_top;
}

Weight halve(const Weight& doubled, const char* what) {
    Weight r = doubled;
    for (size_t i = 0; i < r.theta(); ++i) {
        if (r[i] % 2 != 0)
            throw HalfIntegerResult(std::string(what) + " landed off the lattice at " +
                                    doubled.str());
        r[i] /= 2;
    }
    return r;
}

}  // namespace

Weight dot_reflect(const StandardBundle& bundle, const RootSystemData& rs,
                   const Weight& beta, long long m, const Weight& mu) {
    return halve(dot_reflect_doubled(bundle, rs, beta, m, mu), "dot reflection");
}

long long match_down_to_dot(const BraidingMatrix& q, const RootSystemData& rs,
                            const StandardBundle& bundle, const TorusCharacter& pi,
                            const Weight& beta, const Weight& mu) {
    if (!pi.is_trivial())
        throw PreconditionUnmet("match_down_to_dot needs the trivial torus character");
    long long b = rs.bound_of(beta);
    Weight lambda = down(q, rs, pi, beta, mu);
    // Solve s_{beta,m} • mu = lambda in doubled coordinates:
    // 2mb beta = s_beta(2mu - beta_top) + beta_top - 2 lambda.
    Weight rhs = dot_reflect_doubled(bundle, rs, beta, 0, mu) - lambda * 2;
    size_t lead = 0;
    while (lead < beta.theta() && beta[lead] == 0) ++lead;
    long long denom = 2 * b * beta[lead];
    if (rhs[lead] % denom != 0)
        throw NoSuchM("no integer m with the dot reflection of " + mu.str() +
                      " along " + beta.str() + " hitting " + lambda.str());
    long long m = rhs[lead] / denom;
    if (dot_reflect(bundle, rs, beta, m, mu) != lambda)
        throw NoSuchM("no integer m with the dot reflection of " + mu.str() +
                      " along " + beta.str() + " hitting " + lambda.str());
    return m;
}

namespace {

// Integer column span with exact membership tests (column echelon form built
// by gcd elimination).
class LatticeSpan {
public:
    explicit LatticeSpan(std::vector<Weight> generators) {
        if (generators.empty()) return;
        size_t theta = generators[0].theta();
        std::vector<std::vector<long long>> cols;
        for (const auto& g : generators) cols.push_back(g.coords());
        size_t active = 0;
        for (size_t row = 0; row < theta && active < cols.size(); ++row) {
            while (true) {
                size_t smallest = cols.size();
                for (size_t j = active; j < cols.size(); ++j)
                    if (cols[j][row] != 0 &&
                        (smallest == cols.size() ||
                         std::llabs(cols[j][row]) < std::llabs(cols[smallest][row])))
                        smallest = j;
                if (smallest == cols.size()) break;  // all zero at this row
                bool reduced_any = false;
                for (size_t j = active; j < cols.size(); ++j) {
                    if (j == smallest || cols[j][row] == 0) continue;
                    long long f = cols[j][row] / cols[smallest][row];
                    for (size_t r = 0; r < theta; ++r) cols[j][r] -= f * cols[smallest][r];
                    if (cols[j][row] != 0) reduced_any = true;
                }
                if (!reduced_any) {
                    std::swap(cols[active], cols[smallest]);
                    pivots_.emplace_back(row, cols[active]);
                    ++active;
                    break;
                }
            }
        }
    }

    bool contains(const Weight& v) const {
        std::vector<long long> w = v.coords();
        for (const auto& [row, col] : pivots_) {
            if (w[row] % col[row] != 0) return false;
            long long k = w[row] / col[row];
            for (size_t r = 0; r < w.size(); ++r) w[r] -= k * col[r];
        }
        for (long long x : w)
            if (x != 0) return false;
        return true;
    }

private:
    std::vector<std::pair<size_t, std::vector<long long>>> pivots_;
};

long long floor_div(long long a, long long b) {
    long long d = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? d - 1 : d;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

SuperLinkageReport check_super_linkage(const BraidingMatrix& q, const RootSystemData& rs,
                                       const StandardBundle& bundle,
                                       const TorusCharacter& pi, const Weight& mu,
                                       const WeightBox& window) {
    if (!window.contains(mu))
        throw PreconditionUnmet("mu " + mu.str() + " outside the window");

    std::vector<Weight> cartan_roots, odd_roots;
    for (size_t i = 0; i < rs.positive_roots.size(); ++i)
        (rs.is_cartan[i] ? cartan_roots : odd_roots).push_back(rs.positive_roots[i]);
    LatticeSpan odd_span(odd_roots);

    auto congruent_mod_odd = [&](const Weight& a, const Weight& b) {
        return odd_span.contains(a - b);
    };

    // Dot images of nu along a Cartan root that stay inside the window.
    auto dot_images = [&](const Weight& nu, const Weight& beta) {
        std::vector<Weight> images;
        long long b = rs.bound_of(beta);
        Weight base = dot_reflect_doubled(bundle, rs, beta, 0, nu);
        long long m_lo = 0, m_hi = -1;
        bool first = true;
        for (size_t c = 0; c < beta.theta(); ++c) {
            if (beta[c] == 0) continue;
            // window.lo[c] <= (base[c] - 2mb beta[c]) / 2 <= window.hi[c]
            long long num_hi = base[c] - 2 * window.lo[c];
            long long num_lo = base[c] - 2 * window.hi[c];
            long long den = 2 * b * beta[c];
            long long lo = ceil_div(num_lo, den), hi = floor_div(num_hi, den);
            if (first) {
                m_lo = lo;
                m_hi = hi;
                first = false;
            } else {
                m_lo = std::max(m_lo, lo);
                m_hi = std::min(m_hi, hi);
            }
        }
        for (long long m = m_lo; m <= m_hi; ++m) {
            Weight doubled = base - beta * (2 * m * b);
            bool even = true;
            for (size_t c = 0; c < doubled.theta(); ++c)
                if (doubled[c] % 2 != 0) even = false;
            if (!even) continue;  // no integral image at this m
            Weight image = doubled;
            for (size_t c = 0; c < image.theta(); ++c) image[c] /= 2;
            if (window.contains(image)) images.push_back(image);
        }
        return images;
    };

    // Windowed dot orbit of lambda under the Cartan affine reflections.
    auto orbit_meets_base = [&](const Weight& lambda) {
        if (congruent_mod_odd(lambda, mu)) return true;
        std::vector<Weight> queue{lambda};
        std::map<Weight, bool> seen{{lambda, true}};
        for (size_t head = 0; head < queue.size(); ++head) {
            Weight nu = queue[head];
            for (const auto& beta : cartan_roots)
                for (const auto& image : dot_images(nu, beta))
                    if (seen.emplace(image, true).second) {
                        if (congruent_mod_odd(image, mu)) return true;
                        queue.push_back(image);
                    }
        }
        return false;
    };

    auto classes = linkage_classes(q, rs, pi, window);
    const std::vector<Weight>* my_class = nullptr;
    for (const auto& cls : classes)
        if (std::find(cls.begin(), cls.end(), mu) != cls.end()) {
            my_class = &cls;
            break;
        }
    if (!my_class) throw Error("InternalCheck", "mu missing from its own window");

    SuperLinkageReport report;
    std::ostringstream detail;
    size_t checked = 0;
    for (const auto& lambda : *my_class) {
        ++checked;
        if (!orbit_meets_base(lambda)) {
            report.holds = false;
            detail << "linkage class member " << lambda.str()
                   << " has no windowed dot image congruent to " << mu.str()
                   << " modulo the non-Cartan root lattice; ";
        }
    }
    if (report.holds) {
        detail << "all " << checked << " class members of " << mu.str()
               << " reached the base coset";
    }
    report.detail = detail.str();
    return report;
}

bool delta_shift_identity(const RootSystemData& rs, const StandardBundle& bundle,
                          const Weight& beta, const Weight& mu) {
    std::vector<Weight> cartan_roots, odd_roots;
    std::vector<long long> cartan_bounds;
    for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
        if (rs.is_cartan[i]) {
            cartan_roots.push_back(rs.positive_roots[i]);
            cartan_bounds.push_back(rs.bounds[i]);
        } else {
            odd_roots.push_back(rs.positive_roots[i]);
        }
    }
    bool mixed = !odd_roots.empty();
    if (mixed && !rs.cartan(beta))
        throw PreconditionUnmet("beta must be a Cartan root when non-Cartan roots exist");
    if (cartan_roots.empty())
        throw PreconditionUnmet("no Cartan roots to take the half-sum over");
    long long b = cartan_bounds.front();
    for (long long bb : cartan_bounds)
        if (bb != b)
            throw PreconditionUnmet("bounds are not constant on the Cartan roots");

    size_t theta = rs.theta();
    Weight delta2_car = Weight::zero(theta), delta2_odd = Weight::zero(theta);
    for (const auto& g : cartan_roots) delta2_car = delta2_car + g;
    for (const auto& g : odd_roots) delta2_odd = delta2_odd + g;
    Weight delta2 = delta2_car - delta2_odd;

    // Left side: s_beta(2mu - beta_top) + beta_top.
    Weight lhs = dot_reflect_doubled(bundle, rs, beta, 0, mu);
    // Right side, doubled: s_beta(2mu + delta2) - delta2 + b <beta_vee, delta2_car> beta.
    Weight rhs = reflect_by_root(bundle, rs, beta, mu * 2 + delta2) - delta2 +
                 beta * (b * coroot_pairing(bundle, rs, beta, delta2_car));
    return lhs == rhs;
}

}  // namespace qweyl
