#pragma once

// Pattern grouping: fixed-dimension count features, cosine similarity,
// single-linkage components at a threshold, plus the evaluation protocol
// (pairwise accuracy and optimal cluster alignment).

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmining/graph.hpp"
#include "cmining/miner.hpp"

namespace cmining {

struct FeatureVector {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::size_t> label_counts;  // fixed vocabulary order

    std::vector<double> as_dense() const {
        std::vector<double> v;
        v.reserve(2 + label_counts.size());
        v.push_back(static_cast<double>(node_count));
        v.push_back(static_cast<double>(edge_count));
        for (std::size_t c : label_counts) v.push_back(static_cast<double>(c));
        return v;
    }
};

struct ClusteringConfig {
    double similarity_threshold = 0.5;  // gamma in [0, 1]
};

struct Cluster {
    int cluster_id = -1;
    std::vector<int> member_pattern_indices;  // sorted
};

// Vocabulary = sorted union of construct labels across all pattern graphs;
// all vectors share the dimension 2 + |vocabulary|.
inline std::vector<FeatureVector> featurize(const std::vector<Pattern>& patterns) {
    if (patterns.empty())
        throw std::invalid_argument("featurize: no patterns");
    std::set<std::string> vocab;
    for (const Pattern& p : patterns)
        for (const Node& n : p.graph.nodes)
            vocab.insert(n.construct_labels.begin(), n.construct_labels.end());
    std::vector<std::string> ordered(vocab.begin(), vocab.end());

    std::vector<FeatureVector> out;
    out.reserve(patterns.size());
    for (const Pattern& p : patterns) {
        FeatureVector fv;
        fv.node_count = p.graph.node_count();
        fv.edge_count = p.graph.edge_count();
        fv.label_counts.assign(ordered.size(), 0);
        for (const Node& n : p.graph.nodes)
            for (const std::string& l : n.construct_labels) {
                auto it = std::lower_bound(ordered.begin(), ordered.end(), l);
                fv.label_counts[static_cast<std::size_t>(it - ordered.begin())]++;
            }
        out.push_back(std::move(fv));
    }
    return out;
}

inline double cosine(const FeatureVector& u, const FeatureVector& v) {
    std::vector<double> a = u.as_dense(), b = v.as_dense();
    if (a.size() != b.size())
        throw std::invalid_argument("cosine: dimension mismatch");
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0 || nb == 0)
        throw std::invalid_argument("cosine: zero vector");
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Single-linkage grouping: connected components of the graph with an edge
// wherever cosine >= gamma (inclusive). Cluster ids follow the smallest
// member index.
inline std::vector<Cluster> cluster(const std::vector<Pattern>& patterns,
                                    const ClusteringConfig& config) {
    std::vector<FeatureVector> features = featurize(patterns);
    const std::size_t n = features.size();

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cosine(features[i], features[j]) >= config.similarity_threshold)
                parent[find(i)] = find(j);

    std::map<std::size_t, Cluster> by_root;
    for (std::size_t i = 0; i < n; ++i)
        by_root[find(i)].member_pattern_indices.push_back(
            patterns[i].pattern_index >= 0 ? patterns[i].pattern_index
                                           : static_cast<int>(i));
    std::vector<Cluster> clusters;
    for (auto& [root, c] : by_root) {
        std::sort(c.member_pattern_indices.begin(), c.member_pattern_indices.end());
        clusters.push_back(std::move(c));
    }
    std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
        return a.member_pattern_indices.front() < b.member_pattern_indices.front();
    });
    for (std::size_t i = 0; i < clusters.size(); ++i)
        clusters[i].cluster_id = static_cast<int>(i);
    return clusters;
}

namespace detail {

inline std::map<int, int> membership(const std::vector<Cluster>& clusters) {
    std::map<int, int> m;
    for (const Cluster& c : clusters)
        for (int p : c.member_pattern_indices) {
            if (m.count(p))
                throw std::invalid_argument("clusters overlap on pattern " +
                                            std::to_string(p));
            m[p] = c.cluster_id;
        }
    return m;
}

}  // namespace detail

// Fraction of unordered pattern pairs whose co-membership agrees between
// the two clusterings. Invariant under cluster-id relabeling.
inline double pairwise_accuracy(const std::vector<Cluster>& predicted,
                                const std::vector<Cluster>& truth) {
    std::map<int, int> mp = detail::membership(predicted);
    std::map<int, int> mt = detail::membership(truth);
    if (mp.size() != mt.size())
        throw std::invalid_argument("pairwise_accuracy: different universes");
    std::vector<int> universe;
    for (const auto& [p, c] : mp) {
        if (!mt.count(p))
            throw std::invalid_argument("pairwise_accuracy: different universes");
        universe.push_back(p);
    }
    if (universe.size() < 2) return 1.0;
    std::size_t agree = 0, total = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            bool same_p = mp[universe[i]] == mp[universe[j]];
            bool same_t = mt[universe[i]] == mt[universe[j]];
            if (same_p == same_t) ++agree;
            ++total;
        }
    return static_cast<double>(agree) / static_cast<double>(total);
}

namespace detail {

// Hungarian algorithm (O(n^3) potentials formulation) on a square cost
// matrix; returns the column assigned to each row.
inline std::vector<int> hungarian_min_cost(
    const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

}  // namespace detail

// Optimal assignment predicted cluster -> truth cluster maximizing total
// member overlap on the contingency table. Unmatched predicted clusters
// (when counts differ) map to -1.
inline std::map<int, int> align_clusters(const std::vector<Cluster>& predicted,
                                         const std::vector<Cluster>& truth) {
    std::map<int, int> mt = detail::membership(truth);
    const int np = static_cast<int>(predicted.size());
    const int nt = static_cast<int>(truth.size());
    const int n = std::max(np, nt);

    // Overlap counts, padded to square; maximize via negated costs.
    std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < np; ++i)
        for (int p : predicted[i].member_pattern_indices) {
            auto it = mt.find(p);
            if (it == mt.end()) continue;
            for (int j = 0; j < nt; ++j)
                if (truth[j].cluster_id == it->second) cost[i][j] -= 1.0;
        }
    std::vector<int> row_to_col = detail::hungarian_min_cost(cost);

    std::map<int, int> out;
    for (int i = 0; i < np; ++i) {
        int j = row_to_col[i];
        out[predicted[i].cluster_id] = j < nt ? truth[j].cluster_id : -1;
    }
    return out;
}

}  // namespace cmining
