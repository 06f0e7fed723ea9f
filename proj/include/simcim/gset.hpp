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

#ifndef SIMCIM_GSET_HPP
#define SIMCIM_GSET_HPP

#include <iosfwd>
#include <string>

#include "simcim/ising_problem.hpp"

namespace simcim {

// GSet text format:
//   line 1:            n m
//   m edge lines:      i j w     (1-based endpoints, real or integer w)
// Blank lines and lines starting with '#' are skipped. Parsing is
// strict otherwise: bad counts, out-of-range endpoints, self-loops,
// duplicate pairs and trailing garbage raise ParseError with the 1-based
// line number. Edge weights w become couplings J = -w, which makes the
// max-cut objective of the instance the minimum-energy objective here.
IsingProblem parse_gset(std::istream& in, const std::string& name,
                        Storage storage = Storage::kAuto);

IsingProblem load_gset_file(const std::string& path,
                            Storage storage = Storage::kAuto);

// Inverse of parse_gset (writes w = -J, canonical i < j order, 1-based).
// Round-trips integer weights exactly; real weights use max precision.
void serialize_gset(const IsingProblem& problem, std::ostream& out);

void save_gset_file(const IsingProblem& problem, const std::string& path);

}  // namespace simcim

#endif  // SIMCIM_GSET_HPP
