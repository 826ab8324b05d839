#include "qweyl/verification.hpp"

#include <algorithm>
#include <sstream>

namespace qweyl {

long long SampleRng::range(long long lo, long long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
}

Weight SampleRng::weight(size_t theta, long long lo, long long hi) {
    std::vector<long long> c(theta);
    for (auto& x : c) x = range(lo, hi);
    return Weight(std::move(c));
}

RootOfUnity SampleRng::root_of_unity() {
    static const long long dens[] = {1, 2, 3, 4, 5, 6, 8, 12};
    long long den = dens[next() % 8];
    return RootOfUnity::from_fraction(Int(static_cast<long long>(next() % den)), Int(den));
}

TorusCharacter SampleRng::torus_character(size_t theta, bool force_nontrivial) {
    TorusCharacter pi = TorusCharacter::trivial(theta);
    for (int tries = 0; tries < 100; ++tries) {
        for (size_t i = 0; i < theta; ++i) pi.k[i] = root_of_unity();
        for (size_t i = 0; i < theta; ++i) pi.l[i] = root_of_unity();
        if (!force_nontrivial || !pi.is_trivial()) return pi;
    }
    pi.k[0] = RootOfUnity::from_fraction(1, 2);
    return pi;
}

ObjectContext make_context(const BraidingMatrix& q) {
    ObjectContext ctx{Groupoid::orbit(q), {}, {}, 0};
    for (size_t i = 0; i < ctx.groupoid.size(); ++i) {
        ctx.homs.push_back(hom_into(ctx.groupoid, static_cast<int>(i)));
        ctx.systems.push_back(
            compute_root_system(ctx.groupoid, static_cast<int>(i), ctx.homs.back()));
    }
    return ctx;
}

Outcome check_roots_oracle(const ObjectContext& ctx) {
    const Groupoid& g = ctx.groupoid;
    const size_t hom_size = ctx.homs.empty() ? 0 : ctx.homs[0].size();
    size_t morphisms = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        const RootSystemData& rs = ctx.systems[i];
        const std::vector<Morphism>& hom = ctx.homs[i];
        std::ostringstream os;
        if (hom.size() != hom_size) {
            os << "object " << i << ": hom set has " << hom.size() << " morphisms, object 0 has "
               << hom_size;
            return {false, os.str()};
        }
        std::set<Weight> listed(rs.positive_roots.begin(), rs.positive_roots.end());
        if (listed.size() != rs.positive_roots.size()) {
            os << "object " << i << ": duplicate root in the reduced-word enumeration";
            return {false, os.str()};
        }
        if (listed != positive_roots_oracle(g, hom)) {
            os << "object " << i << ": reduced-word roots differ from the simple-root sweep";
            return {false, os.str()};
        }
        for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
            auto b = g.object(static_cast<int>(i)).bound(rs.positive_roots[r]);
            if (!b || *b != rs.bounds[r]) {
                os << "object " << i << ": stored bound of " << rs.positive_roots[r].str()
                   << " does not match the bicharacter order";
                return {false, os.str()};
            }
        }
        if (rs.w0.map.apply(ctx.systems[rs.w0.source].beta_top) != -rs.beta_top) {
            os << "object " << i << ": longest element does not send beta_top to -beta_top";
            return {false, os.str()};
        }
        for (const Morphism& w : hom) {
            ++morphisms;
            const RootSystemData& src = ctx.systems[w.source];
            if (length_by_roots(w, src.positive_roots, rs.positive_roots) != w.length()) {
                os << "object " << i << ": word of length " << w.length()
                   << " flips a different number of roots";
                return {false, os.str()};
            }
            if (!(g.object(w.source).dual_action(w.map) == g.object(w.target))) {
                os << "object " << i << ": morphism matrix does not carry its source braiding "
                   << "to its target";
                return {false, os.str()};
            }
            for (const Weight& beta : src.positive_roots) {
                if (g.object(w.target).bound(w.map.apply(beta)) != g.object(w.source).bound(beta)) {
                    os << "object " << i << ": bound of " << beta.str()
                       << " not preserved along a morphism";
                    return {false, os.str()};
                }
            }
        }
    }
    std::ostringstream os;
    os << g.size() << " objects, " << ctx.base_system().positive_roots.size()
       << " positive roots each, " << morphisms << " morphisms cross-checked";
    return {true, os.str()};
}

Outcome check_master_identity(const ObjectContext& ctx, uint64_t seed, int samples) {
    const RootSystemData& rs = ctx.base_system();
    SampleRng rng(seed);
    int compared = 0;
    for (int s = 0; s < samples; ++s) {
        Weight mu = rng.weight(rs.theta(), -10, 10);
        FormalCharacter plain = ch_verma(rs, mu);
        for (const Morphism& w : ctx.base_hom()) {
            if (!(ch_twisted_verma(rs, w, shift(rs, w, mu)) == plain)) {
                std::ostringstream os;
                os << "twisted character differs from the plain one at mu=" << mu.str()
                   << " for a word of length " << w.length();
                return {false, os.str()};
            }
            ++compared;
        }
    }
    std::ostringstream os;
    os << samples << " weights x " << ctx.base_hom().size() << " twists, " << compared
       << " character identities";
    return {true, os.str()};
}

Outcome check_n_equals_t(const ObjectContext& ctx, uint64_t seed, int mu_samples,
                         int extra_pis) {
    const RootSystemData& rs = ctx.base_system();
    const BraidingMatrix& q = ctx.base_matrix();
    SampleRng rng(seed);
    std::vector<TorusCharacter> pis{TorusCharacter::trivial(rs.theta())};
    for (int p = 0; p < extra_pis; ++p) pis.push_back(rng.torus_character(rs.theta(), true));
    int compared = 0;
    int nonzero = 0;
    for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
        const Weight& beta = rs.positive_roots[r];
        const Morphism& w = rs.presentations[r].w;
        for (const TorusCharacter& pi : pis) {
            for (int s = 0; s < mu_samples; ++s) {
                Weight mu = rng.weight(rs.theta(), -10, 10);
                Weight shifted = shift(rs, w, mu);
                long long n = n_beta(q, rs, pi, mu, beta);
                long long t = t_beta(q, rs, pi, shifted, beta);
                long long t2 = t_beta_via_bracket(q, rs, pi, shifted, beta);
                if (n != t || t != t2) {
                    std::ostringstream os;
                    os << "beta=" << beta.str() << " mu=" << mu.str() << ": n=" << n
                       << " t=" << t << " bracket=" << t2;
                    return {false, os.str()};
                }
                if (n != 0) ++nonzero;
                ++compared;
            }
        }
    }
    std::ostringstream os;
    os << compared << " scan pairs across " << rs.positive_roots.size() << " roots and "
       << pis.size() << " characters, " << nonzero << " nonzero";
    return {true, os.str()};
}

Outcome check_typicality_paths(const ObjectContext& ctx, uint64_t seed, int samples) {
    const RootSystemData& rs = ctx.base_system();
    const BraidingMatrix& q = ctx.base_matrix();
    SampleRng rng(seed);
    int typical_count = 0;
    int atypical_count = 0;
    for (int s = 0; s < samples; ++s) {
        TorusCharacter pi = rng.torus_character(rs.theta(), false);
        if (s % 4 == 0) pi = TorusCharacter::trivial(rs.theta());
        Weight mu = rng.weight(rs.theta(), -10, 10);
        Atypicality a = atypicality(q, rs, pi, mu);
        Atypicality b = atypicality_via_factors(q, rs, pi, mu);
        std::ostringstream os;
        if (a.degree != b.degree || a.zero_roots != b.zero_roots) {
            os << "mu=" << mu.str() << ": scan path degree " << a.degree
               << " vs factor path degree " << b.degree;
            return {false, os.str()};
        }
        std::vector<Weight> direct;
        for (const Weight& beta : rs.positive_roots)
            if (n_beta(q, rs, pi, mu, beta) != 0) direct.push_back(beta);
        if (direct != a.zero_roots) {
            os << "mu=" << mu.str() << ": vanishing-root list differs from a direct scan";
            return {false, os.str()};
        }
        bool threw = false;
        try {
            FormalCharacter simple = ch_simple_typical(q, rs, pi, mu);
            if (!(simple == ch_verma(rs, mu))) {
                os << "mu=" << mu.str() << ": typical simple character is not the standard one";
                return {false, os.str()};
            }
        } catch (const NotTypical&) {
            threw = true;
        }
        if (threw == a.typical()) {
            os << "mu=" << mu.str() << ": typicality flag and ch_simple_typical disagree";
            return {false, os.str()};
        }
        (a.typical() ? typical_count : atypical_count)++;
    }
    std::ostringstream os;
    os << samples << " samples: " << typical_count << " typical, " << atypical_count
       << " atypical, both decision paths agree";
    return {true, os.str()};
}

Outcome check_window_and_chains(const ObjectContext& ctx, uint64_t seed, int samples) {
    const RootSystemData& rs = ctx.base_system();
    const BraidingMatrix& q = ctx.base_matrix();
    SampleRng rng(seed);
    size_t largest = 0;
    size_t members = 0;
    for (int s = 0; s < samples; ++s) {
        TorusCharacter pi = rng.torus_character(rs.theta(), false);
        if (s % 3 == 0) pi = TorusCharacter::trivial(rs.theta());
        Weight mu = rng.weight(rs.theta(), -10, 10);
        auto linked = strongly_linked_set(q, rs, pi, mu);
        std::ostringstream os;
        if (linked.empty() || linked.front().lambda != mu || !linked.front().chain.empty()) {
            os << "mu=" << mu.str() << ": set does not start at mu";
            return {false, os.str()};
        }
        Weight floor = mu - rs.beta_top;
        std::set<Weight> seen;
        for (const LinkedWeight& lw : linked) {
            if (!seen.insert(lw.lambda).second) {
                os << "mu=" << mu.str() << ": duplicate member " << lw.lambda.str();
                return {false, os.str()};
            }
            if (!leq(floor, lw.lambda) || !leq(lw.lambda, mu)) {
                os << "mu=" << mu.str() << ": member " << lw.lambda.str()
                   << " escapes [mu - beta_top, mu]";
                return {false, os.str()};
            }
            Weight cur = mu;
            for (const auto& [beta, n] : lw.chain) {
                if (n <= 0 || n_beta(q, rs, pi, cur, beta) != n) {
                    os << "mu=" << mu.str() << ": chain hop (" << beta.str() << ", " << n
                       << ") does not replay";
                    return {false, os.str()};
                }
                cur = cur - beta * n;
            }
            if (cur != lw.lambda) {
                os << "mu=" << mu.str() << ": chain of " << lw.lambda.str()
                   << " ends at " << cur.str();
                return {false, os.str()};
            }
        }
        largest = std::max(largest, linked.size());
        members += linked.size();
    }
    std::ostringstream os;
    os << samples << " base weights, " << members << " linked weights replayed, largest set "
       << largest;
    return {true, os.str()};
}

Outcome check_dot_lemma(const ObjectContext& ctx, uint64_t seed, int samples, bool strict) {
    const RootSystemData& rs = ctx.base_system();
    const BraidingMatrix& q = ctx.base_matrix();
    StandardBundle bundle = require_standard_type(ctx.groupoid, ctx.systems);
    TorusCharacter pi = TorusCharacter::trivial(rs.theta());
    SampleRng rng(seed);
    int matched = 0;
    int skipped = 0;
    int shifts = 0;
    for (int s = 0; s < samples; ++s) {
        Weight mu = rng.weight(rs.theta(), -10, 10);
        for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
            if (!rs.is_cartan[r]) continue;
            const Weight& beta = rs.positive_roots[r];
            std::ostringstream os;
            try {
                long long m = match_down_to_dot(q, rs, bundle, pi, beta, mu);
                if (dot_reflect(bundle, rs, beta, m, mu) != down(q, rs, pi, beta, mu)) {
                    os << "beta=" << beta.str() << " mu=" << mu.str() << ": m=" << m
                       << " does not reproduce the down-arrow";
                    return {false, os.str()};
                }
                ++matched;
            } catch (const HalfIntegerResult&) {
                if (strict) {
                    os << "beta=" << beta.str() << " mu=" << mu.str()
                       << ": dot action left the lattice";
                    return {false, os.str()};
                }
                ++skipped;
            }
            try {
                if (!delta_shift_identity(rs, bundle, beta, mu)) {
                    os << "beta=" << beta.str() << " mu=" << mu.str()
                       << ": delta-shift rewrite of the dot action failed";
                    return {false, os.str()};
                }
                ++shifts;
            } catch (const PreconditionUnmet&) {
                if (strict) {
                    os << "beta=" << beta.str()
                       << ": delta-shift precondition unmet on this entry";
                    return {false, os.str()};
                }
                ++skipped;
            }
        }
    }
    std::ostringstream os;
    os << matched << " affine matches re-verified, " << shifts << " delta-shift rewrites";
    if (skipped) os << ", " << skipped << " skipped";
    return {true, os.str()};
}

Outcome check_containment(const ObjectContext& ctx, const std::vector<Weight>& mus,
                          const WeightBox& window) {
    const RootSystemData& rs = ctx.base_system();
    const BraidingMatrix& q = ctx.base_matrix();
    StandardBundle bundle = require_standard_type(ctx.groupoid, ctx.systems);
    TorusCharacter pi = TorusCharacter::trivial(rs.theta());
    for (const Weight& mu : mus) {
        SuperLinkageReport rep = check_super_linkage(q, rs, bundle, pi, mu, window);
        if (!rep.holds) return {false, "mu=" + mu.str() + ": " + rep.detail};
    }
    std::ostringstream os;
    os << mus.size() << " base weights contained, window of " << window.cardinality()
       << " points";
    return {true, os.str()};
}

std::vector<std::pair<std::string, Outcome>> run_suite(const BraidingMatrix& q,
                                                       uint64_t seed) {
    std::vector<std::pair<std::string, Outcome>> out;
    ObjectContext ctx = make_context(q);
    out.emplace_back("roots-oracle", check_roots_oracle(ctx));
    out.emplace_back("verma-vs-twisted", check_master_identity(ctx, seed, 25));
    out.emplace_back("n-equals-t", check_n_equals_t(ctx, seed + 1, 40, 2));
    out.emplace_back("typicality-paths", check_typicality_paths(ctx, seed + 2, 60));
    out.emplace_back("linkage-window", check_window_and_chains(ctx, seed + 3, 20));
    bool standard = is_standard_type(ctx.groupoid, ctx.systems);
    const RootSystemData& rs = ctx.base_system();
    bool any_cartan =
        std::any_of(rs.is_cartan.begin(), rs.is_cartan.end(), [](bool b) { return b; });
    if (standard && any_cartan) {
        out.emplace_back("dot-lemma", check_dot_lemma(ctx, seed + 4, 15, false));
    } else {
        out.emplace_back("dot-lemma", Outcome{true, "skipped: no Cartan roots on a shared "
                                                    "Cartan matrix"});
    }
    if (standard) {
        Weight zero = Weight::zero(rs.theta());
        WeightBox window{zero - rs.beta_top, zero + rs.beta_top};
        std::vector<Weight> mus{zero, Weight::basis(rs.theta(), 0)};
        out.emplace_back("linkage-containment", check_containment(ctx, mus, window));
    } else {
        out.emplace_back("linkage-containment",
                         Outcome{true, "skipped: objects carry different Cartan data"});
    }
    return out;
}

}  // namespace qweyl
