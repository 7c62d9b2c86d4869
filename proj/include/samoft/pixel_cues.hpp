#pragma once

#include <vector>

#include "samoft/core.hpp"

namespace samoft::pixel {

// Running population statistics of flow magnitude over a track's lifetime.
struct FlowStats {
    long long n = 0;
    double mu = 0.0;
    double sigma = 0.0;
};

inline constexpr double kCdmEpsilon = 1e-6;
inline constexpr double kPdfTauM = 0.7;    // published best PDF configuration
inline constexpr double kPdfAlpha = 0.45;  // 2*alpha = 0.9

// Displace integer-source pixels by the flow field, dropping points that
// leave [0, w-1] x [0, h-1]. Output order follows input order.
PixelSet warp_pixels(const PixelSet& pixels, const FlowField& flow);

// -(warped points landing on detection-mask foreground) / |warped|, in [-1, 0].
// Fractional points round to the nearest pixel. Throws EmptyPixelSet.
double pmm_cost(const PixelSet& warped, const Mask& det_mask);
// Same, against a predecoded bitmap (hot path for cost-matrix assembly).
double pmm_cost(const PixelSet& warped, const std::vector<std::uint8_t>& bitmap,
                int height, int width);

// Euclidean distance between mask centroids. Throws EmptyMask.
double centroid_distance(const Mask& a, const Mask& b);

// -exp(1 - d/dmin) per entry with dmin = max(min(distances), epsilon),
// clamped to [-1, 0].
std::vector<double> cdm_cost_row(const std::vector<double>& distances,
                                 double epsilon = kCdmEpsilon);

// Population mean/std/count of per-pixel flow magnitude; (0,0,0) when empty.
FlowStats flow_magnitude_stats(const PixelSet& pixels, const FlowField& flow);

// Tight box over the warped pixel locations. Throws DegeneratePixelSet when
// either axis spans less than 1e-6 px.
BBox flow_box(const PixelSet& warped);

// Record into the long-tail distribution iff flow_iou - kf_iou > tau_d.
bool dbc_should_record(double kf_iou, double flow_iou, double tau_d);

// Exact pooled population moments of the two sample sets.
FlowStats dbc_merge_stats(const FlowStats& prev, const FlowStats& cur);

// Correction fires when the current mean magnitude lies within one standard
// deviation of the recorded distribution mean; never before the first record.
bool dbc_trigger(const FlowStats& stats, double current_mean);

// Elementwise max(kf, flow) when triggered, kf unchanged otherwise.
std::vector<double> dbc_correct_row(const std::vector<double>& kf_ious,
                                    const std::vector<double>& flow_ious, bool triggered);

// Heuristic pixel-denoising filter: keeps pixels whose min-max normalized
// magnitude reaches tau_m (all kept when the magnitudes are constant) and
// which lie on the center cross |x-xc| <= alpha*W or |y-yc| <= alpha*H.
PixelSet pdf_filter(const PixelSet& pixels, const FlowField& flow, const BBox& box,
                    double tau_m = kPdfTauM, double alpha = kPdfAlpha);

} // namespace samoft::pixel
