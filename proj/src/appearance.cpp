#include "samoft/appearance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "samoft/kernels.hpp"

namespace samoft::appearance {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

double cosine_cost(const Embedding& a, const Embedding& b) { return 1.0 - a.dot(b); }

Embedding ema_update(const Embedding& track_feat, const Embedding& det_feat, double alpha) {
    std::vector<double> blend(track_feat.dim());
    for (std::size_t i = 0; i < blend.size(); ++i)
        blend[i] = alpha * track_feat.values[i] + (1.0 - alpha) * det_feat.values[i];
    double s = 0.0;
    for (double v : blend) s += v * v;
    if (std::sqrt(s) < 1e-9) return track_feat;  // degenerate blend, keep previous
    return Embedding::normalized(std::move(blend));
}

ClusterPartition build_clusters(const std::vector<Detection>& dets, double iou_thresh) {
    const int n = static_cast<int>(dets.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (iou(dets[i].box, dets[j].box) > iou_thresh) uf.unite(i, j);

    ClusterPartition out;
    out.cluster_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        const int root = uf.find(i);
        if (out.cluster_of[root] < 0) {
            out.cluster_of[root] = static_cast<int>(out.clusters.size());
            out.clusters.emplace_back();
        }
        const int c = out.cluster_of[root];
        out.cluster_of[i] = c;
        out.clusters[c].push_back(i);
    }
    out.representative.resize(out.clusters.size());
    for (std::size_t c = 0; c < out.clusters.size(); ++c) {
        int best = out.clusters[c].front();
        for (int i : out.clusters[c])
            if (dets[i].confidence > dets[best].confidence) best = i;
        out.representative[c] = best;
    }
    return out;
}

void careid_update(std::vector<std::optional<Embedding>>& track_features,
                   const std::vector<std::pair<int, int>>& matches,
                   const std::vector<Detection>& dets, const ClusterPartition& partition,
                   double alpha, bool careid_enabled) {
    for (const auto& [ti, dj] : matches) {
        const Detection& det = dets[dj];
        if (!det.embedding) continue;
        if (careid_enabled && !partition.is_representative(dj)) continue;
        if (track_features[ti])
            track_features[ti] = ema_update(*track_features[ti], *det.embedding, alpha);
        else
            track_features[ti] = det.embedding;
    }
}

std::vector<double> appearance_cost_matrix(const std::vector<const Embedding*>& track_feats,
                                           const std::vector<const Embedding*>& det_feats) {
    return kernels::cosine_cost_matrix(track_feats, det_feats);
}

} // namespace samoft::appearance
