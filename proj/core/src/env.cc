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

#include "qperc/env.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qperc/text.h"

namespace qperc {

void WorldConfig::validate() const {
    if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
        throw std::invalid_argument("WorldConfig: need 0 < r_min < r_max");
    }
    if (!(step_sigma >= 0.0) || !std::isfinite(step_sigma)) {
        throw std::invalid_argument("WorldConfig: step_sigma must be finite and >= 0");
    }
    if (!(sample_period_s > 0.0) || !std::isfinite(sample_period_s)) {
        throw std::invalid_argument("WorldConfig: sample_period_s must be positive");
    }
    if (start_x.has_value() != start_y.has_value()) {
        throw std::invalid_argument("WorldConfig: start_x and start_y must be given together");
    }
    if (start_x) {
        double r = std::hypot(*start_x, *start_y);
        if (!(r >= r_min && r <= r_max)) {
            throw std::invalid_argument("WorldConfig: start pose lies outside [r_min, r_max]");
        }
    }
}

namespace {

double parse_real(std::string_view key, std::string_view v) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw std::invalid_argument("bad value for '" + std::string(key) + "': '" + std::string(v) + "'");
    }
    return out;
}

}  // namespace

WorldConfig parse_world_config(std::string_view text) {
    WorldConfig cfg;
    size_t line_no = 0;
    for (std::string_view raw : split(text, '\n')) {
        line_no++;
        std::string_view line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("world config line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        try {
            if (key == "r_min") {
                cfg.r_min = parse_real(key, value);
            } else if (key == "r_max") {
                cfg.r_max = parse_real(key, value);
            } else if (key == "step_sigma") {
                cfg.step_sigma = parse_real(key, value);
            } else if (key == "sample_period_s") {
                cfg.sample_period_s = parse_real(key, value);
            } else if (key == "start_x") {
                cfg.start_x = parse_real(key, value);
            } else if (key == "start_y") {
                cfg.start_y = parse_real(key, value);
            } else if (key == "seed") {
                uint64_t s = 0;
                auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
                if (ec != std::errc{} || ptr != value.data() + value.size()) {
                    throw std::invalid_argument("bad value for 'seed': '" + std::string(value) + "'");
                }
                cfg.seed = s;
            } else {
                throw std::invalid_argument("unknown key '" + std::string(key) + "'");
            }
        } catch (const std::invalid_argument &ex) {
            throw std::invalid_argument("world config line " + std::to_string(line_no) + ": " + ex.what());
        }
    }
    cfg.validate();
    return cfg;
}

double ObjectPose::radius() const {
    return std::hypot(x, y);
}

ObjectPose step(const ObjectPose &pose, const WorldConfig &cfg, Rng &rng) {
    ObjectPose next{pose.x + cfg.step_sigma * rng.normal(), pose.y + cfg.step_sigma * rng.normal()};
    double r = next.radius();
    double target = r;
    if (r < cfg.r_min) {
        target = cfg.r_min;
    } else if (r > cfg.r_max) {
        target = cfg.r_max;
    }
    if (target == r) {
        return next;
    }
    if (r == 0.0) {
        // No direction left; keep the previous bearing.
        double pr = pose.radius();
        return {pose.x / pr * target, pose.y / pr * target};
    }
    ObjectPose projected{next.x / r * target, next.y / r * target};
    // Rounding can leave the projected radius an ulp or two outside the band.
    double nudge = r < cfg.r_min ? 1.0 + 0x1.0p-52 : 1.0 - 0x1.0p-52;
    for (int k = 0; k < 8; k++) {
        double pr = projected.radius();
        if (pr >= cfg.r_min && pr <= cfg.r_max) {
            break;
        }
        projected = {projected.x * nudge, projected.y * nudge};
    }
    return projected;
}

Event sense(const ObjectPose &pose) {
    return pose.x > 0.0 ? Event::kFront : Event::kBack;
}

World::World(WorldConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
    if (cfg_.start_x) {
        pose_ = {*cfg_.start_x, *cfg_.start_y};
    } else {
        double r = 0.5 * (cfg_.r_min + cfg_.r_max);
        double a = 2.0 * std::numbers::pi * rng_.uniform();
        pose_ = {r * std::cos(a), r * std::sin(a)};
    }
}

Event World::tick() {
    pose_ = step(pose_, cfg_, rng_);
    Event e = sense(pose_);
    ticks_++;
    if (trace_ != nullptr) {
        trace_->push_back({static_cast<double>(ticks_) * cfg_.sample_period_s, pose_, e});
    }
    return e;
}

EventSequence generate_window(World &world, size_t tau) {
    if (tau == 0) {
        throw std::invalid_argument("generate_window: tau must be >= 1");
    }
    std::vector<Event> events;
    events.reserve(tau);
    for (size_t k = 0; k < tau; k++) {
        events.push_back(world.tick());
    }
    return EventSequence(std::move(events));
}

std::string format_pose_trace(const std::vector<PoseSample> &trace) {
    std::string out = "t,x,y,alpha\n";
    for (const auto &s : trace) {
        out += format_double(s.t);
        out += ',';
        out += format_double(s.pose.x);
        out += ',';
        out += format_double(s.pose.y);
        out += ',';
        out += format_double(alpha(s.event));
        out += '\n';
    }
    return out;
}

}  // namespace qperc
