#include "samoft/core.hpp"

#include <algorithm>
#include <cmath>

namespace samoft {

double iou(const BBox& a, const BBox& b) {
    const double ix = std::max(a.x, b.x);
    const double iy = std::max(a.y, b.y);
    const double ix2 = std::min(a.right(), b.right());
    const double iy2 = std::min(a.bottom(), b.bottom());
    const double iw = ix2 - ix;
    const double ih = iy2 - iy;
    if (iw <= 0.0 || ih <= 0.0) return 0.0;
    const double inter = iw * ih;
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

long long Mask::pixel_count() const {
    long long n = 0;
    for (std::size_t i = 1; i < runs.size(); i += 2) n += runs[i];
    return n;
}

void Mask::validate() const {
    if (height <= 0 || width <= 0) throw Error("mask: non-positive dimensions");
    long long total = 0;
    for (int r : runs) {
        if (r < 0) throw Error("mask: negative run length");
        total += r;
    }
    if (total != static_cast<long long>(height) * width)
        throw RunSumMismatch("mask: run sum does not cover height*width");
}

std::vector<std::uint8_t> Mask::decode() const {
    std::vector<std::uint8_t> bitmap(static_cast<std::size_t>(height) * width, 0);
    std::size_t pos = 0;
    std::uint8_t value = 0;  // first run is background
    for (int r : runs) {
        std::fill_n(bitmap.begin() + pos, r, value);
        pos += static_cast<std::size_t>(r);
        value ^= 1;
    }
    return bitmap;
}

Mask Mask::encode(int height, int width, const std::vector<std::uint8_t>& bitmap) {
    Mask m;
    m.height = height;
    m.width = width;
    std::uint8_t value = 0;
    int run = 0;
    for (std::uint8_t b : bitmap) {
        if ((b != 0) == (value != 0)) {
            ++run;
        } else {
            m.runs.push_back(run);
            value ^= 1;
            run = 1;
        }
    }
    m.runs.push_back(run);
    return m;
}

PixelSet mask_pixels(const Mask& m) {
    PixelSet out;
    out.points.reserve(static_cast<std::size_t>(m.pixel_count()));
    long long pos = 0;
    bool fg = false;
    for (int r : m.runs) {
        if (fg) {
            for (long long i = pos; i < pos + r; ++i) {
                // column-major: flat index = x * height + y
                out.points.push_back({static_cast<double>(i / m.height),
                                      static_cast<double>(i % m.height)});
            }
        }
        pos += r;
        fg = !fg;
    }
    return out;
}

Point mask_centroid(const Mask& m) {
    long long n = 0;
    double sx = 0.0, sy = 0.0;
    long long pos = 0;
    bool fg = false;
    for (int r : m.runs) {
        if (fg && r > 0) {
            for (long long i = pos; i < pos + r; ++i) {
                sx += static_cast<double>(i / m.height);
                sy += static_cast<double>(i % m.height);
            }
            n += r;
        }
        pos += r;
        fg = !fg;
    }
    if (n == 0) throw EmptyMask("mask_centroid: mask has no foreground pixels");
    return {sx / static_cast<double>(n), sy / static_cast<double>(n)};
}

double Embedding::dot(const Embedding& other) const {
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * other.values[i];
    return s;
}

double Embedding::norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
}

Embedding Embedding::normalized(std::vector<double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    const double n = std::sqrt(s);
    if (n < 1e-9) throw DegenerateFeature("embedding: norm below 1e-9");
    for (double& x : v) x /= n;
    return Embedding{std::move(v)};
}

void AssocConfig::validate() const {
    if (!(low_conf_thresh > 0.0 && low_conf_thresh <= high_conf_thresh && high_conf_thresh <= 1.0))
        throw BadValue("config: require 0 < low_conf_thresh <= high_conf_thresh <= 1");
    if (!(tau_d > 0.0)) throw BadValue("config: tau_d must be > 0");
    if (!(cluster_iou_thresh > 0.0 && cluster_iou_thresh < 1.0))
        throw BadValue("config: cluster_iou_thresh must lie in (0,1)");
    if (!(ema_alpha > 0.0 && ema_alpha < 1.0))
        throw BadValue("config: ema_alpha must lie in (0,1)");
    if (max_age < 1) throw BadValue("config: max_age must be positive");
    if (min_hits < 1) throw BadValue("config: min_hits must be positive");
    if (ocm_delta_t < 1) throw BadValue("config: ocm_delta_t must be positive");
    if (!(match_gate >= 0.0)) throw BadValue("config: match_gate must be >= 0");
}

AssocConfig AssocConfig::baseline() {
    AssocConfig c;
    c.pmm_enabled = false;
    c.cdm_enabled = false;
    c.dbc_enabled = false;
    c.careid_enabled = false;
    c.lambda_appr = 0.0;  // the motion-only baseline carries no appearance branch
    return c;
}

} // namespace samoft
