// Copyright 2026 The qperc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPERC_ENV_H
#define QPERC_ENV_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qperc/encoder.h"
#include "qperc/rng.h"

namespace qperc {

/// Parameters of the simulated scene: a fixed robot at the origin facing +x
/// and one object wandering in the annulus r_min <= r <= r_max.
struct WorldConfig {
    /// Collision-exclusion radius (m).
    double r_min = 0.5;
    /// Detectability radius (m).
    double r_max = 3.0;
    /// Per-axis standard deviation of one random-walk step (m).
    double step_sigma = 0.1;
    /// Sensor sample period T_s (s). Only used to timestamp logs.
    double sample_period_s = 0.1;
    uint64_t seed = 1;
    /// Starting pose; a uniformly random point on the mid-radius circle when
    /// unset.
    std::optional<double> start_x;
    std::optional<double> start_y;

    /// Throws std::invalid_argument unless 0 < r_min < r_max, step_sigma >= 0,
    /// sample_period_s > 0 and any start pose lies in the annulus.
    void validate() const;
};

/// Reads a flat `key=value` file (keys: r_min, r_max, step_sigma,
/// sample_period_s, seed, start_x, start_y). `#` starts a comment. Unknown
/// keys are errors.
WorldConfig parse_world_config(std::string_view text);

struct ObjectPose {
    double x = 0.0;
    double y = 0.0;

    double radius() const;
};

/// Gaussian step on each axis, then radial projection back into the annulus.
ObjectPose step(const ObjectPose &pose, const WorldConfig &cfg, Rng &rng);

/// Front when the bearing lies strictly inside (-pi/2, pi/2), i.e. x > 0.
/// Bearings of exactly +-pi/2 go to the back sensor.
Event sense(const ObjectPose &pose);

/// One row of the optional pose trace.
struct PoseSample {
    double t = 0.0;
    ObjectPose pose;
    Event event = Event::kFront;
};

/// Stateful world: one pose and one Rng. Single-threaded.
class World {
   public:
    explicit World(WorldConfig cfg);

    /// Advances one sample period and returns the reading taken there.
    Event tick();

    const ObjectPose &pose() const { return pose_; }
    uint64_t ticks() const { return ticks_; }
    const WorldConfig &config() const { return cfg_; }

    /// When set, every tick appends a PoseSample.
    void set_trace(std::vector<PoseSample> *trace) { trace_ = trace; }

   private:
    WorldConfig cfg_;
    Rng rng_;
    ObjectPose pose_;
    uint64_t ticks_ = 0;
    std::vector<PoseSample> *trace_ = nullptr;
};

/// tau consecutive readings as one window.
EventSequence generate_window(World &world, size_t tau);

/// `t,x,y,alpha` rows with a header line.
std::string format_pose_trace(const std::vector<PoseSample> &trace);

}  // namespace qperc

#endif
