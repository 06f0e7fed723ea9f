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

#ifndef SIMCIM_SCHEDULE_HPP
#define SIMCIM_SCHEDULE_HPP

#include <cstdint>

namespace simcim {

// Scalar control value as a function of the iteration index. Used for
// the pump ramp and for the annealing-strength schedule of the mean
// field baseline.
class PumpSchedule {
 public:
  // value(t) = start for all t in [0, duration).
  static PumpSchedule constant(double start, std::int32_t duration);

  // Smooth ramp from start to end over [0, duration):
  //   phase(t) = 2 t / (duration - 1) - 1        in [-1, 1]
  //   value(t) = start + (end - start) * (1 + tanh(steepness * phase)) / 2
  // duration == 1 uses phase = 0 (the midpoint). steepness must be > 0.
  static PumpSchedule tanh_ramp(double start, double end, double steepness,
                                std::int32_t duration);

  double value(std::int32_t t) const;

  double start() const { return start_; }
  double end() const { return end_; }
  double steepness() const { return steepness_; }
  std::int32_t duration() const { return duration_; }
  bool is_constant() const { return constant_; }

 private:
  PumpSchedule() = default;

  bool constant_ = true;
  double start_ = 0.0;
  double end_ = 0.0;
  double steepness_ = 1.0;
  std::int32_t duration_ = 1;
};

}  // namespace simcim

#endif  // SIMCIM_SCHEDULE_HPP
