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

#ifndef SIMCIM_ERRORS_HPP
#define SIMCIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simcim {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument values, dimension mismatches, violated preconditions.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed instance file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Solver produced a non-finite amplitude.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// File system failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace simcim

#endif  // SIMCIM_ERRORS_HPP
