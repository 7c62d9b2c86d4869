#include "samoft/pixel_cues.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "samoft/kernels.hpp"

namespace samoft::pixel {

PixelSet warp_pixels(const PixelSet& pixels, const FlowField& flow) {
    return kernels::warp_pixels(pixels, flow);
}

double pmm_cost(const PixelSet& warped, const std::vector<std::uint8_t>& bitmap,
                int height, int width) {
    if (warped.empty()) throw EmptyPixelSet("pmm_cost: empty warped pixel set");
    const long long hits = kernels::containment_count(warped, bitmap, height, width);
    return -static_cast<double>(hits) / static_cast<double>(warped.size());
}

double pmm_cost(const PixelSet& warped, const Mask& det_mask) {
    return pmm_cost(warped, det_mask.decode(), det_mask.height, det_mask.width);
}

double centroid_distance(const Mask& a, const Mask& b) {
    const Point ca = mask_centroid(a);
    const Point cb = mask_centroid(b);
    return std::hypot(ca.x - cb.x, ca.y - cb.y);
}

std::vector<double> cdm_cost_row(const std::vector<double>& distances, double epsilon) {
    const double dmin = std::max(*std::min_element(distances.begin(), distances.end()), epsilon);
    std::vector<double> out(distances.size());
    for (std::size_t j = 0; j < distances.size(); ++j) {
        const double c = -std::exp(1.0 - distances[j] / dmin);
        out[j] = std::clamp(c, -1.0, 0.0);
    }
    return out;
}

FlowStats flow_magnitude_stats(const PixelSet& pixels, const FlowField& flow) {
    const kernels::MomentSums s = kernels::magnitude_moments(pixels, flow);
    FlowStats out;
    out.n = s.n;
    if (s.n == 0) return out;
    out.mu = s.sum / static_cast<double>(s.n);
    const double var = std::max(0.0, s.sum_sq / static_cast<double>(s.n) - out.mu * out.mu);
    out.sigma = std::sqrt(var);
    return out;
}

BBox flow_box(const PixelSet& warped) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();
    for (const Point& p : warped.points) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    if (warped.size() < 2 || max_x - min_x < 1e-6 || max_y - min_y < 1e-6)
        throw DegeneratePixelSet("flow_box: pixel set spans no area");
    return {min_x, min_y, max_x - min_x, max_y - min_y};
}

bool dbc_should_record(double kf_iou, double flow_iou, double tau_d) {
    return flow_iou - kf_iou > tau_d;
}

FlowStats dbc_merge_stats(const FlowStats& prev, const FlowStats& cur) {
    if (prev.n == 0) return cur;
    FlowStats out;
    const double np = static_cast<double>(prev.n);
    const double nt = static_cast<double>(cur.n);
    out.n = prev.n + cur.n;
    const double n = static_cast<double>(out.n);
    out.mu = (np * prev.mu + nt * cur.mu) / n;
    const double dmu = prev.mu - cur.mu;
    // standard pooled population variance; the divisor belongs inside the root
    out.sigma = std::sqrt((np * prev.sigma * prev.sigma + nt * cur.sigma * cur.sigma +
                           np * nt * dmu * dmu / n) /
                          n);
    return out;
}

bool dbc_trigger(const FlowStats& stats, double current_mean) {
    if (stats.n == 0) return false;
    return std::abs(current_mean - stats.mu) <= stats.sigma;
}

std::vector<double> dbc_correct_row(const std::vector<double>& kf_ious,
                                    const std::vector<double>& flow_ious, bool triggered) {
    if (!triggered) return kf_ious;
    std::vector<double> out(kf_ious.size());
    for (std::size_t j = 0; j < kf_ious.size(); ++j) out[j] = std::max(kf_ious[j], flow_ious[j]);
    return out;
}

PixelSet pdf_filter(const PixelSet& pixels, const FlowField& flow, const BBox& box,
                    double tau_m, double alpha) {
    const std::size_t n = pixels.size();
    PixelSet out;
    if (n == 0) return out;

    std::vector<double> mags(n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = pixels.points[i];
        const int sx = static_cast<int>(p.x);
        const int sy = static_cast<int>(p.y);
        mags[i] = std::hypot(static_cast<double>(flow.u_at(sx, sy)),
                             static_cast<double>(flow.v_at(sx, sy)));
        lo = std::min(lo, mags[i]);
        hi = std::max(hi, mags[i]);
    }
    const double range = hi - lo;

    const double xc = box.cx();
    const double yc = box.cy();
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double normalized = range > 0.0 ? (mags[i] - lo) / range : 1.0;
        if (normalized < tau_m) continue;
        const Point& p = pixels.points[i];
        if (std::abs(p.x - xc) <= alpha * box.w || std::abs(p.y - yc) <= alpha * box.h)
            out.points.push_back(p);
    }
    return out;
}

} // namespace samoft::pixel
