#pragma once

#include <deque>
#include <utility>

#include <Eigen/Dense>

#include "samoft/core.hpp"

namespace samoft::motion {

using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

// Constant-velocity SORT state: [cx, cy, s, r, vcx, vcy, vs]
// with s = area, r = aspect ratio (w/h).
struct KFState {
    Vec7 mean = Vec7::Zero();
    Mat7 covariance = Mat7::Identity();
};

// Noise diagonals, SORT lineage.
struct KalmanParams {
    double p0_pos = 10.0;        // initial position/scale variance
    double p0_vel = 1e4;         // initial (unobserved) velocity variance
    double q_pos = 1.0;          // process noise, position
    double q_scale = 1.0;        // process noise, scale/ratio
    double q_vel = 1e-2;         // process noise, velocities
    double q_vscale = 1e-4;      // process noise, scale velocity
    double r_pos = 1.0;          // measurement noise, center
    double r_scale = 10.0;       // measurement noise, area/ratio
};

KFState kf_init(const BBox& box, const KalmanParams& params = {});
// Applies the constant-velocity transition; clamps vs to 0 first if it would
// drive s nonpositive. Returns the new state and the predicted box.
std::pair<KFState, BBox> kf_predict(const KFState& state, const KalmanParams& params = {});
KFState kf_update(const KFState& state, const BBox& obs, const KalmanParams& params = {});

// mean -> top-left box (w = sqrt(s*r), h = s/w).
BBox state_box(const KFState& state);

// Ring buffer of (frame, box) observations, frames strictly increasing.
class ObservationHistory {
public:
    explicit ObservationHistory(int capacity = 8) : capacity_(capacity < 2 ? 2 : capacity) {}

    void push(int frame, const BBox& box);
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::pair<int, BBox>& latest() const { return entries_.back(); }
    // Observation delta_t steps before the latest, clamped to the oldest kept.
    const std::pair<int, BBox>& lookback(int delta_t) const;

private:
    int capacity_;
    std::deque<std::pair<int, BBox>> entries_;
};

// Angle between the track's historical velocity direction (lookback -> latest
// observation) and the direction from that older observation to the detection
// center, normalized to [0,1] by pi. 0 (neutral) when the history is shorter
// than two entries or either direction is shorter than 1e-6 px.
double ocm_cost(const ObservationHistory& history, const BBox& det, int delta_t);

} // namespace samoft::motion
