#include "qweyl/rootsystem.hpp"

#include <algorithm>

namespace qweyl {

int RootSystemData::root_index(const Weight& beta) const {
    for (size_t i = 0; i < positive_roots.size(); ++i)
        if (positive_roots[i] == beta) return static_cast<int>(i);
    return -1;
}

int RootSystemData::checked_index(const Weight& beta) const {
    int i = root_index(beta);
    if (i < 0) throw UsageError(beta.str() + " is not a positive root here");
    return i;
}

long long RootSystemData::bound_of(const Weight& beta) const {
    return bounds[checked_index(beta)];
}

namespace {

long long finite_bound(const BraidingMatrix& q, const Weight& beta) {
    auto b = q.bound(beta);
    if (!b) throw InfiniteBound("q(beta,beta) = 1 at beta = " + beta.str());
    if (*b > Int(1) << 40)
        throw InfiniteBound("bound at " + beta.str() + " too large to enumerate");
    return static_cast<long long>(*b);
}

}  // namespace

RootSystemData compute_root_system(const Groupoid& g, int object,
                                   const std::vector<Morphism>& hom) {
    RootSystemData rs;
    rs.object = object;
    rs.w0 = longest_element(hom);
    const BraidingMatrix& q = g.object(object);
    size_t theta = g.theta();

    // beta_nu = (length-(nu-1) prefix of w0)(alpha_{i_nu}), walking the
    // object chain from the target.
    LatticeAutomorphism prefix = LatticeAutomorphism::identity(theta);
    int at_object = object;
    for (int gen : rs.w0.word) {
        Weight root = prefix.apply(Weight::basis(theta, gen));
        rs.positive_roots.push_back(root);
        prefix = prefix.compose(g.reflection(at_object, gen));
        at_object = g.neighbor(at_object, gen);
    }

    rs.beta_top = Weight::zero(theta);
    for (const auto& root : rs.positive_roots) {
        long long b = finite_bound(q, root);
        rs.bounds.push_back(b);
        rs.beta_top = rs.beta_top + root * (b - 1);
    }

    // Shortest presentation per root, plus the Cartan classification: a root
    // is Cartan when some presentation w(alpha_i) has i a Cartan vertex of
    // the source.  hom is in BFS order, so the first hit is shortest.
    rs.presentations.assign(rs.positive_roots.size(), RootPresentation{});
    std::vector<bool> have(rs.positive_roots.size(), false);
    rs.is_cartan.assign(rs.positive_roots.size(), false);
    for (const auto& w : hom) {
        for (size_t i = 0; i < theta; ++i) {
            Weight image = w.map.apply(Weight::basis(theta, i));
            int idx = rs.root_index(image);
            if (idx < 0) continue;  // negative image
            if (!have[idx]) {
                have[idx] = true;
                rs.presentations[idx] = RootPresentation{w, static_cast<int>(i)};
            }
            if (!rs.is_cartan[idx] && is_cartan_vertex(g.object(w.source), i))
                rs.is_cartan[idx] = true;
        }
    }
    for (size_t i = 0; i < have.size(); ++i)
        if (!have[i])
            throw Error("InternalCheck", "no presentation found for root " +
                                             rs.positive_roots[i].str());
    return rs;
}

std::set<Weight> positive_roots_oracle(const Groupoid& g, const std::vector<Morphism>& hom) {
    std::set<Weight> out;
    for (const auto& w : hom)
        for (size_t i = 0; i < g.theta(); ++i) {
            Weight image = w.map.apply(Weight::basis(g.theta(), i));
            if (image.nonneg()) out.insert(image);
        }
    return out;
}

Weight shift(const RootSystemData& rs_target, const Morphism& w, const Weight& mu) {
    Weight result = mu;
    for (size_t k = 0; k < rs_target.positive_roots.size(); ++k) {
        const Weight& beta = rs_target.positive_roots[k];
        if (w.inv.apply(beta).nonpos())
            result = result - beta * (rs_target.bounds[k] - 1);
    }
    return result;
}

bool is_cartan_vertex(const BraidingMatrix& p, size_t i) {
    for (size_t j = 0; j < p.theta(); ++j) {
        if (j == i) continue;
        long long c = p.cartan_entry(i, j);
        if (p.at(i, i).pow(c) != p.at(i, j) * p.at(j, i)) return false;
    }
    return true;
}

std::vector<RootSystemData> root_systems_for_all_objects(const Groupoid& g,
                                                         size_t morphism_cap) {
    std::vector<RootSystemData> out;
    for (int obj = 0; obj < static_cast<int>(g.size()); ++obj)
        out.push_back(compute_root_system(g, obj, hom_into(g, obj, morphism_cap)));
    return out;
}

bool is_standard_type(const Groupoid& g, const std::vector<RootSystemData>& all_systems) {
    size_t theta = g.theta();
    for (size_t obj = 0; obj < g.size(); ++obj) {
        for (size_t i = 0; i < theta; ++i)
            for (size_t j = 0; j < theta; ++j)
                if (g.object(obj).cartan_entry(i, j) != g.object(0).cartan_entry(i, j))
                    return false;
        std::set<Weight> mine(all_systems[obj].positive_roots.begin(),
                              all_systems[obj].positive_roots.end());
        std::set<Weight> base(all_systems[0].positive_roots.begin(),
                              all_systems[0].positive_roots.end());
        if (mine != base) return false;
    }
    return true;
}

StandardBundle require_standard_type(const Groupoid& g,
                                     const std::vector<RootSystemData>& all_systems) {
    if (!is_standard_type(g, all_systems))
        throw NotStandardType("objects do not share one Cartan matrix and root set");
    StandardBundle b;
    size_t theta = g.theta();
    b.cartan.assign(theta, std::vector<long long>(theta, 0));
    for (size_t i = 0; i < theta; ++i)
        for (size_t j = 0; j < theta; ++j) b.cartan[i][j] = g.object(0).cartan_entry(i, j);
    b.positive_roots = all_systems[0].positive_roots;
    return b;
}

}  // namespace qweyl
