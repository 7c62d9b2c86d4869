#include "samoft/kernels.hpp"

#include <atomic>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace samoft::kernels {

namespace {

std::atomic<int> g_max_threads{0};

int effective_threads() {
#ifdef _OPENMP
    int n = g_max_threads.load(std::memory_order_relaxed);
    if (n <= 0) n = omp_get_max_threads();
    return n;
#else
    return 1;
#endif
}

// Below this element count the parallel paths are pure overhead.
constexpr std::size_t kParallelCutoff = 4096;

bool use_parallel(std::size_t work_items) {
    return effective_threads() > 1 && work_items >= kParallelCutoff;
}

inline bool warp_point(const Point& p, const FlowField& flow, Point& out) {
    const int sx = static_cast<int>(p.x);
    const int sy = static_cast<int>(p.y);
    const double wx = p.x + flow.u_at(sx, sy);
    const double wy = p.y + flow.v_at(sx, sy);
    if (wx < 0.0 || wy < 0.0 || wx > flow.width - 1.0 || wy > flow.height - 1.0) return false;
    out = {wx, wy};
    return true;
}

inline bool point_in_bitmap(const Point& p, const std::vector<std::uint8_t>& bitmap,
                            int height, int width) {
    const long px = std::lround(p.x);
    const long py = std::lround(p.y);
    if (px < 0 || py < 0 || px >= width || py >= height) return false;
    return bitmap[static_cast<std::size_t>(px) * height + py] != 0;
}

inline double magnitude_at(const Point& p, const FlowField& flow) {
    const int sx = static_cast<int>(p.x);
    const int sy = static_cast<int>(p.y);
    const double u = flow.u_at(sx, sy);
    const double v = flow.v_at(sx, sy);
    return std::sqrt(u * u + v * v);
}

} // namespace

void set_max_threads(int n) { g_max_threads.store(n, std::memory_order_relaxed); }

int max_threads() { return effective_threads(); }

std::vector<double> iou_matrix_serial(const std::vector<BBox>& a, const std::vector<BBox>& b) {
    std::vector<double> m(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            m[i * b.size() + j] = iou(a[i], b[j]);
    return m;
}

std::vector<double> iou_matrix_parallel(const std::vector<BBox>& a, const std::vector<BBox>& b) {
    std::vector<double> m(a.size() * b.size());
    const std::int64_t total = static_cast<std::int64_t>(a.size() * b.size());
    const std::int64_t cols = static_cast<std::int64_t>(b.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads())
#endif
    for (std::int64_t k = 0; k < total; ++k)
        m[k] = iou(a[k / cols], b[k % cols]);
    return m;
}

std::vector<double> iou_matrix(const std::vector<BBox>& a, const std::vector<BBox>& b) {
    return use_parallel(a.size() * b.size()) ? iou_matrix_parallel(a, b) : iou_matrix_serial(a, b);
}

PixelSet warp_pixels_serial(const PixelSet& pixels, const FlowField& flow) {
    PixelSet out;
    out.points.reserve(pixels.size());
    Point w;
    for (const Point& p : pixels.points)
        if (warp_point(p, flow, w)) out.points.push_back(w);
    return out;
}

PixelSet warp_pixels_parallel(const PixelSet& pixels, const FlowField& flow) {
    const std::size_t n = pixels.size();
    std::vector<Point> warped(n);
    std::vector<std::uint8_t> keep(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads())
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        keep[i] = warp_point(pixels.points[i], flow, warped[i]) ? 1 : 0;
    // serial compaction keeps input order
    PixelSet out;
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) out.points.push_back(warped[i]);
    return out;
}

PixelSet warp_pixels(const PixelSet& pixels, const FlowField& flow) {
    return use_parallel(pixels.size()) ? warp_pixels_parallel(pixels, flow)
                                       : warp_pixels_serial(pixels, flow);
}

long long containment_count_serial(const PixelSet& points, const std::vector<std::uint8_t>& bitmap,
                                   int height, int width) {
    long long hits = 0;
    for (const Point& p : points.points)
        if (point_in_bitmap(p, bitmap, height, width)) ++hits;
    return hits;
}

long long containment_count_parallel(const PixelSet& points, const std::vector<std::uint8_t>& bitmap,
                                     int height, int width) {
    long long hits = 0;
    const std::int64_t n = static_cast<std::int64_t>(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : hits) num_threads(effective_threads())
#endif
    for (std::int64_t i = 0; i < n; ++i)
        if (point_in_bitmap(points.points[i], bitmap, height, width)) ++hits;
    return hits;
}

long long containment_count(const PixelSet& points, const std::vector<std::uint8_t>& bitmap,
                            int height, int width) {
    return use_parallel(points.size())
               ? containment_count_parallel(points, bitmap, height, width)
               : containment_count_serial(points, bitmap, height, width);
}

MomentSums magnitude_moments_serial(const PixelSet& pixels, const FlowField& flow) {
    MomentSums s;
    s.n = static_cast<long long>(pixels.size());
    for (const Point& p : pixels.points) {
        const double m = magnitude_at(p, flow);
        s.sum += m;
        s.sum_sq += m * m;
    }
    return s;
}

MomentSums magnitude_moments_parallel(const PixelSet& pixels, const FlowField& flow) {
#ifdef _OPENMP
    const std::int64_t n = static_cast<std::int64_t>(pixels.size());
    const int nthreads = effective_threads();
    std::vector<MomentSums> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
        const int tid = omp_get_thread_num();
        MomentSums local;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const double m = magnitude_at(pixels.points[i], flow);
            local.sum += m;
            local.sum_sq += m * m;
        }
        partial[tid] = local;
    }
    MomentSums s;
    s.n = n;
    for (const MomentSums& p : partial) {
        s.sum += p.sum;
        s.sum_sq += p.sum_sq;
    }
    return s;
#else
    return magnitude_moments_serial(pixels, flow);
#endif
}

MomentSums magnitude_moments(const PixelSet& pixels, const FlowField& flow) {
    return use_parallel(pixels.size()) ? magnitude_moments_parallel(pixels, flow)
                                       : magnitude_moments_serial(pixels, flow);
}

std::vector<double> cosine_cost_matrix_serial(const std::vector<const Embedding*>& a,
                                              const std::vector<const Embedding*>& b) {
    std::vector<double> m(a.size() * b.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) m[i * b.size() + j] = 1.0 - a[i]->dot(*b[j]);
    }
    return m;
}

std::vector<double> cosine_cost_matrix_parallel(const std::vector<const Embedding*>& a,
                                                const std::vector<const Embedding*>& b) {
    std::vector<double> m(a.size() * b.size(), 0.0);
    const std::int64_t total = static_cast<std::int64_t>(a.size() * b.size());
    const std::int64_t cols = static_cast<std::int64_t>(b.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads())
#endif
    for (std::int64_t k = 0; k < total; ++k) {
        const Embedding* ea = a[k / cols];
        const Embedding* eb = b[k % cols];
        if (ea && eb) m[k] = 1.0 - ea->dot(*eb);
    }
    return m;
}

std::vector<double> cosine_cost_matrix(const std::vector<const Embedding*>& a,
                                       const std::vector<const Embedding*>& b) {
    const std::size_t dim = [&] {
        for (const Embedding* e : a)
            if (e) return e->dim();
        return std::size_t{1};
    }();
    return use_parallel(a.size() * b.size() * dim) ? cosine_cost_matrix_parallel(a, b)
                                                   : cosine_cost_matrix_serial(a, b);
}

} // namespace samoft::kernels
