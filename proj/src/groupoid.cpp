#include "qweyl/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace qweyl {

Groupoid Groupoid::orbit(const BraidingMatrix& q, size_t object_cap) {
    Groupoid g;
    g.theta_ = q.theta();
    std::map<BraidingMatrix, int> index;
    g.objects_.push_back(q);
    index.emplace(q, 0);

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (g.neighbors_.size() <= static_cast<size_t>(cur)) {
            g.neighbors_.resize(cur + 1);
            g.reflections_.resize(cur + 1);
        }
        g.neighbors_[cur].assign(g.theta_, -1);
        g.reflections_[cur].assign(g.theta_, LatticeAutomorphism());
        for (size_t i = 0; i < g.theta_; ++i) {
            BraidingMatrix image = g.objects_[cur].reflect(i);
            auto [it, fresh] = index.emplace(image, static_cast<int>(g.objects_.size()));
            if (fresh) {
                if (g.objects_.size() >= object_cap)
                    throw OrbitCapExceeded("orbit exceeds " + std::to_string(object_cap) +
                                           " objects");
                g.objects_.push_back(std::move(image));
                queue.push_back(it->second);
            }
            g.neighbors_[cur][i] = it->second;
            g.reflections_[cur][i] = g.objects_[cur].simple_reflection(i);
        }
    }
    return g;
}

std::vector<GroupoidEdge> Groupoid::edges() const {
    std::vector<GroupoidEdge> out;
    for (int i = 0; i < static_cast<int>(size()); ++i)
        for (size_t gen = 0; gen < theta_; ++gen) {
            int j = neighbors_[i][gen];
            if (i <= j) out.push_back({i, static_cast<int>(gen), j});
        }
    return out;
}

std::vector<Morphism> hom_into(const Groupoid& g, int target, size_t morphism_cap) {
    std::vector<Morphism> out;
    std::map<std::pair<int, LatticeAutomorphism>, bool> seen;

    Morphism id;
    id.source = id.target = target;
    id.map = id.inv = LatticeAutomorphism::identity(g.theta());
    seen.emplace(std::make_pair(id.source, id.map), true);
    out.push_back(std::move(id));

    // Queue over indices into `out`; extensions append a generator at the
    // source end, so matrices multiply on the right.
    for (size_t head = 0; head < out.size(); ++head) {
        for (size_t i = 0; i < g.theta(); ++i) {
            const Morphism& m = out[head];  // re-read; push_back may reallocate
            int new_source = g.neighbor(m.source, i);
            const LatticeAutomorphism& s = g.reflection(m.source, i);
            Morphism ext;
            ext.source = new_source;
            ext.target = m.target;
            ext.map = m.map.compose(s);
            ext.inv = s.compose(m.inv);  // s is an involution
            ext.word = m.word;
            ext.word.push_back(static_cast<int>(i));
            auto key = std::make_pair(ext.source, ext.map);
            if (seen.emplace(key, true).second) {
                if (out.size() >= morphism_cap)
                    throw MorphismCapExceeded("hom set exceeds " +
                                              std::to_string(morphism_cap) + " morphisms");
                out.push_back(std::move(ext));
            }
        }
    }
    return out;
}

const Morphism& longest_element(const std::vector<Morphism>& hom) {
    if (hom.empty()) throw AmbiguousLongest("empty hom set");
    size_t best = 0;
    bool tie = false;
    for (size_t i = 1; i < hom.size(); ++i) {
        if (hom[i].length() > hom[best].length()) {
            best = i;
            tie = false;
        } else if (hom[i].length() == hom[best].length()) {
            tie = true;
        }
    }
    if (tie)
        throw AmbiguousLongest("maximal length " + std::to_string(hom[best].length()) +
                               " attained more than once");
    return hom[best];
}

Morphism morphism_from_word(const Groupoid& g, int target, const std::vector<int>& word) {
    Morphism m;
    m.source = m.target = target;
    m.map = m.inv = LatticeAutomorphism::identity(g.theta());
    for (int gen : word) {
        if (gen < 0 || static_cast<size_t>(gen) >= g.theta())
            throw UsageError("word entry " + std::to_string(gen + 1) + " is out of range");
        const LatticeAutomorphism& s = g.reflection(m.source, gen);
        m.map = m.map.compose(s);
        m.inv = s.compose(m.inv);
        m.word.push_back(gen);
        m.source = g.neighbor(m.source, gen);
    }
    return m;
}

size_t length_by_roots(const Morphism& w, const std::vector<Weight>& src_positive,
                       const std::vector<Weight>& tgt_positive) {
    size_t count = 0;
    for (const auto& beta : src_positive) {
        Weight image = w.map.apply(beta);
        if (std::find(tgt_positive.begin(), tgt_positive.end(), -image) != tgt_positive.end())
            ++count;
    }
    return count;
}

}  // namespace qweyl
