#include "samoft/motion.hpp"

#include <algorithm>
#include <cmath>

namespace samoft::motion {

namespace {

using Vec4 = Eigen::Matrix<double, 4, 1>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Mat47 = Eigen::Matrix<double, 4, 7>;

Mat7 transition() {
    Mat7 f = Mat7::Identity();
    f(0, 4) = 1.0;
    f(1, 5) = 1.0;
    f(2, 6) = 1.0;
    return f;
}

Mat7 process_noise(const KalmanParams& p) {
    Mat7 q = Mat7::Zero();
    q.diagonal() << p.q_pos, p.q_pos, p.q_scale, p.q_scale, p.q_vel, p.q_vel, p.q_vscale;
    return q;
}

Mat47 observation() {
    Mat47 h = Mat47::Zero();
    h(0, 0) = h(1, 1) = h(2, 2) = h(3, 3) = 1.0;
    return h;
}

Vec4 box_to_measurement(const BBox& box) {
    Vec4 z;
    z << box.cx(), box.cy(), box.area(), box.w / box.h;
    return z;
}

constexpr double kMinScale = 1e-6;

} // namespace

KFState kf_init(const BBox& box, const KalmanParams& p) {
    KFState s;
    s.mean.head<4>() = box_to_measurement(box);
    s.covariance = Mat7::Zero();
    s.covariance.diagonal() << p.p0_pos, p.p0_pos, p.p0_pos, p.p0_pos, p.p0_vel, p.p0_vel, p.p0_vel;
    return s;
}

std::pair<KFState, BBox> kf_predict(const KFState& state, const KalmanParams& p) {
    KFState out = state;
    if (out.mean(2) + out.mean(6) <= 0.0) out.mean(6) = 0.0;
    const Mat7 f = transition();
    out.mean = f * out.mean;
    out.covariance = f * out.covariance * f.transpose() + process_noise(p);
    return {out, state_box(out)};
}

KFState kf_update(const KFState& state, const BBox& obs, const KalmanParams& p) {
    const Mat47 h = observation();
    Mat4 r = Mat4::Zero();
    r.diagonal() << p.r_pos, p.r_pos, p.r_scale, p.r_scale;

    const Vec4 innovation = box_to_measurement(obs) - h * state.mean;
    const Mat4 s = h * state.covariance * h.transpose() + r;
    const Eigen::Matrix<double, 7, 4> gain = state.covariance * h.transpose() * s.inverse();

    KFState out;
    out.mean = state.mean + gain * innovation;
    out.covariance = (Mat7::Identity() - gain * h) * state.covariance;
    out.covariance = ((out.covariance + out.covariance.transpose()) / 2.0).eval();
    out.mean(2) = std::max(out.mean(2), kMinScale);
    out.mean(3) = std::max(out.mean(3), kMinScale);
    return out;
}

BBox state_box(const KFState& state) {
    const double s = std::max(state.mean(2), kMinScale);
    const double r = std::max(state.mean(3), kMinScale);
    const double w = std::sqrt(s * r);
    const double h = s / w;
    return {state.mean(0) - w / 2.0, state.mean(1) - h / 2.0, w, h};
}

void ObservationHistory::push(int frame, const BBox& box) {
    if (!entries_.empty() && frame <= entries_.back().first)
        throw Error("observation history: frames must be strictly increasing");
    entries_.emplace_back(frame, box);
    while (entries_.size() > static_cast<std::size_t>(capacity_)) entries_.pop_front();
}

const std::pair<int, BBox>& ObservationHistory::lookback(int delta_t) const {
    const long idx = std::max<long>(0, static_cast<long>(entries_.size()) - 1 - delta_t);
    return entries_[static_cast<std::size_t>(idx)];
}

double ocm_cost(const ObservationHistory& history, const BBox& det, int delta_t) {
    if (history.size() < 2) return 0.0;
    const BBox& older = history.lookback(delta_t).second;
    const BBox& latest = history.latest().second;
    const double v1x = latest.cx() - older.cx();
    const double v1y = latest.cy() - older.cy();
    const double v2x = det.cx() - older.cx();
    const double v2y = det.cy() - older.cy();
    const double n1 = std::hypot(v1x, v1y);
    const double n2 = std::hypot(v2x, v2y);
    if (n1 < 1e-6 || n2 < 1e-6) return 0.0;
    const double c = std::clamp((v1x * v2x + v1y * v2y) / (n1 * n2), -1.0, 1.0);
    return std::acos(c) / M_PI;
}

} // namespace samoft::motion
