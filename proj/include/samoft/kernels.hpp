#pragma once

#include <cstdint>
#include <vector>

#include "samoft/core.hpp"

// Data-parallel inner loops of the association pipeline. Every kernel has a
// serial reference implementation and an OpenMP one; the dispatch entry
// points pick the parallel path when worthwhile. Tests assert the two paths
// agree (exactly for pairwise/counting kernels, to 1e-12 for reductions).
namespace samoft::kernels {

// Clamp the thread count used by the *_parallel kernels. 0 = hardware default,
// 1 = always serial. Affects dispatch only; explicit *_serial / *_parallel
// calls ignore it.
void set_max_threads(int n);
int max_threads();

// Pairwise IoU, rows = a.size(), cols = b.size(), row-major.
std::vector<double> iou_matrix_serial(const std::vector<BBox>& a, const std::vector<BBox>& b);
std::vector<double> iou_matrix_parallel(const std::vector<BBox>& a, const std::vector<BBox>& b);
std::vector<double> iou_matrix(const std::vector<BBox>& a, const std::vector<BBox>& b);

// p -> p + (u(p), v(p)); drops points whose warped location leaves
// [0, w-1] x [0, h-1]; survivor order follows input order.
PixelSet warp_pixels_serial(const PixelSet& pixels, const FlowField& flow);
PixelSet warp_pixels_parallel(const PixelSet& pixels, const FlowField& flow);
PixelSet warp_pixels(const PixelSet& pixels, const FlowField& flow);

// Number of points whose nearest integer pixel is foreground in the bitmap
// (column-major height*width, as produced by Mask::decode()).
long long containment_count_serial(const PixelSet& points, const std::vector<std::uint8_t>& bitmap,
                                   int height, int width);
long long containment_count_parallel(const PixelSet& points, const std::vector<std::uint8_t>& bitmap,
                                     int height, int width);
long long containment_count(const PixelSet& points, const std::vector<std::uint8_t>& bitmap,
                            int height, int width);

struct MomentSums {
    long long n = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
};

// Flow-magnitude moment sums over integer source pixels.
MomentSums magnitude_moments_serial(const PixelSet& pixels, const FlowField& flow);
// Per-thread partials over static chunks, combined in thread order, so the
// result is reproducible for a fixed thread count.
MomentSums magnitude_moments_parallel(const PixelSet& pixels, const FlowField& flow);
MomentSums magnitude_moments(const PixelSet& pixels, const FlowField& flow);

// Pairwise cosine distance 1 - dot. A null entry on either side yields a
// neutral 0 entry.
std::vector<double> cosine_cost_matrix_serial(const std::vector<const Embedding*>& a,
                                              const std::vector<const Embedding*>& b);
std::vector<double> cosine_cost_matrix_parallel(const std::vector<const Embedding*>& a,
                                                const std::vector<const Embedding*>& b);
std::vector<double> cosine_cost_matrix(const std::vector<const Embedding*>& a,
                                       const std::vector<const Embedding*>& b);

} // namespace samoft::kernels
