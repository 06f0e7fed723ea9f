// Copyright 2026 simcim developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simcim/schedule.hpp"

#include <cmath>

#include "simcim/errors.hpp"

namespace simcim {

PumpSchedule PumpSchedule::constant(double start, std::int32_t duration) {
  if (!std::isfinite(start)) {
    throw InvalidArgumentError("constant schedule value must be finite");
  }
  if (duration < 1) throw InvalidArgumentError("schedule duration must be >= 1");
  PumpSchedule s;
  s.constant_ = true;
  s.start_ = start;
  s.end_ = start;
  s.duration_ = duration;
  return s;
}

PumpSchedule PumpSchedule::tanh_ramp(double start, double end, double steepness,
                                     std::int32_t duration) {
  if (!std::isfinite(start) || !std::isfinite(end)) {
    throw InvalidArgumentError("schedule endpoints must be finite");
  }
  if (!(steepness > 0.0) || !std::isfinite(steepness)) {
    throw InvalidArgumentError("schedule steepness must be > 0");
  }
  if (duration < 1) throw InvalidArgumentError("schedule duration must be >= 1");
  PumpSchedule s;
  s.constant_ = false;
  s.start_ = start;
  s.end_ = end;
  s.steepness_ = steepness;
  s.duration_ = duration;
  return s;
}

double PumpSchedule::value(std::int32_t t) const {
  if (t < 0 || t >= duration_) {
    throw InvalidArgumentError("schedule evaluated outside [0, duration)");
  }
  if (constant_) return start_;
  // Single-step schedules use the midpoint of the ramp.
  const double phase =
      duration_ == 1 ? 0.0 : 2.0 * t / (duration_ - 1) - 1.0;
  return start_ + (end_ - start_) * (1.0 + std::tanh(steepness_ * phase)) / 2.0;
}

}  // namespace simcim
