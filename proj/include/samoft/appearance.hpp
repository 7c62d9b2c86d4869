#pragma once

#include <optional>
#include <vector>

#include "samoft/core.hpp"

namespace samoft::appearance {

// Connected components of the detection IoU graph. Indices refer to the
// detection list the partition was built from.
struct ClusterPartition {
    std::vector<std::vector<int>> clusters;  // each sorted ascending
    std::vector<int> representative;         // per cluster: max-confidence member
    std::vector<int> cluster_of;             // detection index -> cluster index

    bool is_representative(int det_index) const {
        return representative[cluster_of[det_index]] == det_index;
    }
};

// 1 - dot(a, b) for unit-norm embeddings, in [0, 2].
double cosine_cost(const Embedding& a, const Embedding& b);

// renormalize(alpha * track + (1 - alpha) * det). A degenerate blend
// (norm < 1e-9, exactly antipodal inputs) keeps the previous feature.
Embedding ema_update(const Embedding& track_feat, const Embedding& det_feat, double alpha);

// Union-find over edges with iou > iou_thresh; representatives break
// confidence ties by lowest detection index.
ClusterPartition build_clusters(const std::vector<Detection>& dets, double iou_thresh);

// Blend matched detections into track features. With careid enabled only the
// cluster representative updates its track; disabled reproduces the simple
// every-match update. Tracks without a feature adopt the detection embedding
// verbatim when an update is allowed.
void careid_update(std::vector<std::optional<Embedding>>& track_features,
                   const std::vector<std::pair<int, int>>& matches,
                   const std::vector<Detection>& dets, const ClusterPartition& partition,
                   double alpha, bool careid_enabled);

// Row-major |tracks| x |dets| cosine costs; missing features/embeddings give
// neutral 0 entries.
std::vector<double> appearance_cost_matrix(const std::vector<const Embedding*>& track_feats,
                                           const std::vector<const Embedding*>& det_feats);

} // namespace samoft::appearance
