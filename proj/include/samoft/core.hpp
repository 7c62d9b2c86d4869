#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "samoft/errors.hpp"

namespace samoft {

// Axis-aligned box, top-left + size (MOTChallenge layout), pixels.
struct BBox {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double right() const { return x + w; }
    double bottom() const { return y + h; }
    double cx() const { return x + w / 2.0; }
    double cy() const { return y + h / 2.0; }
    double area() const { return w * h; }
    bool valid() const { return w > 0.0 && h > 0.0; }
};

// Intersection over union. 0 for disjoint boxes, 1 iff identical.
double iou(const BBox& a, const BBox& b);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Ordered list of pixel locations. Sources are integer mask pixels;
// warped sets may carry fractional coordinates.
struct PixelSet {
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

// Binary foreground mask, run-length encoded column-major with the first
// run counting background (COCO uncompressed convention). Pixel (x, y) is
// column x, row y, origin top-left; its flat index is x * height + y.
struct Mask {
    int height = 0;
    int width = 0;
    std::vector<int> runs;

    long long pixel_count() const;
    // Column-major h*w byte map, 1 = foreground.
    std::vector<std::uint8_t> decode() const;
    static Mask encode(int height, int width, const std::vector<std::uint8_t>& bitmap);
    // Throws Error if sum(runs) != height*width or a run is negative.
    void validate() const;
};

// Foreground pixels in column-major enumeration order.
PixelSet mask_pixels(const Mask& m);
// Arithmetic mean of foreground pixel coordinates. Throws EmptyMask.
Point mask_centroid(const Mask& m);

// Dense per-pixel displacement between consecutive frames.
// Row-major storage, index y * width + x (matches the .flo layout).
struct FlowField {
    int height = 0;
    int width = 0;
    std::vector<float> u;
    std::vector<float> v;

    float u_at(int x, int y) const { return u[static_cast<std::size_t>(y) * width + x]; }
    float v_at(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
};

// Unit-norm appearance vector.
struct Embedding {
    std::vector<double> values;

    std::size_t dim() const { return values.size(); }
    double dot(const Embedding& other) const;
    double norm() const;
    // Scales an arbitrary vector to unit norm. Throws DegenerateFeature
    // when the norm is below 1e-9.
    static Embedding normalized(std::vector<double> v);
};

struct Detection {
    int frame = 0;   // 1-based
    int det_id = 0;  // unique within frame
    BBox box;
    double confidence = 0.0;
    std::optional<Mask> mask;
    std::optional<Embedding> embedding;
};

// All association knobs. Defaults follow the published configuration.
struct AssocConfig {
    double lambda_ilm = 1.0;
    double lambda_p = 0.2;
    double lambda_c = 1.0;
    double lambda_ocm = 0.2;
    double lambda_appr = 1.0;
    double tau_d = 0.1;
    double cluster_iou_thresh = 0.3;
    double high_conf_thresh = 0.6;
    double low_conf_thresh = 0.1;
    double ema_alpha = 0.95;
    int max_age = 30;
    int min_hits = 3;
    int ocm_delta_t = 3;
    double match_gate = 0.1;  // minimum DBC-corrected IoU for a kept match
    bool pmm_enabled = true;
    bool cdm_enabled = true;
    bool dbc_enabled = true;
    bool careid_enabled = true;

    // Throws BadValue on any invariant violation.
    void validate() const;

    // OC-SORT-style baseline: all pixel/appearance modules off.
    static AssocConfig baseline();
};

} // namespace samoft
