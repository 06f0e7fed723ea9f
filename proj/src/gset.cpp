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

#include "simcim/gset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "simcim/errors.hpp"

namespace simcim {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Reads the next content line; returns false on clean EOF.
bool next_content_line(std::istream& in, std::string& line,
                       std::int64_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank_or_comment(line)) return true;
  }
  return false;
}

struct LineScanner {
  const std::string& line;
  std::int64_t line_no;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_no, message);
  }

  std::int64_t read_int(const char* what) {
    skip_space();
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + pos) {
      fail(std::string("expected integer ") + what);
    }
    pos = static_cast<std::size_t>(ptr - line.data());
    return value;
  }

  double read_real(const char* what) {
    skip_space();
    // strtod via a bounded copy: from_chars<double> coverage varies.
    const std::string token = line.substr(pos, line.find_first_of(" \t", pos) - pos);
    if (token.empty()) fail(std::string("expected number ") + what);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      fail(std::string("expected number ") + what);
    }
    if (used != token.size() || !std::isfinite(value)) {
      fail(std::string("malformed number ") + what);
    }
    pos += used;
    return value;
  }

  void expect_end() {
    skip_space();
    if (pos != line.size()) fail("trailing characters after fields");
  }
};

}  // namespace

IsingProblem parse_gset(std::istream& in, const std::string& name,
                        Storage storage) {
  std::string line;
  std::int64_t line_no = 0;

  if (!next_content_line(in, line, line_no)) {
    throw ParseError(1, "empty input, expected header 'n m'");
  }
  LineScanner header{line, line_no};
  const std::int64_t n = header.read_int("node count");
  const std::int64_t m = header.read_int("edge count");
  header.expect_end();
  if (n < 1) header.fail("node count must be >= 1");
  if (m < 0) header.fail("edge count must be >= 0");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::unordered_set<std::int64_t> seen;
  seen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::int64_t k = 0; k < m; ++k) {
    if (!next_content_line(in, line, line_no)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                        " edge lines, got " + std::to_string(k));
    }
    LineScanner scan{line, line_no};
    const std::int64_t i = scan.read_int("edge endpoint");
    const std::int64_t j = scan.read_int("edge endpoint");
    const double w = scan.read_real("edge weight");
    scan.expect_end();
    if (i < 1 || i > n || j < 1 || j > n) {
      scan.fail("endpoint out of range [1, " + std::to_string(n) + "]");
    }
    if (i == j) scan.fail("self-loop on node " + std::to_string(i));
    const std::int64_t key = std::min(i, j) * (n + 1) + std::max(i, j);
    if (!seen.insert(key).second) {
      scan.fail("duplicate edge (" + std::to_string(std::min(i, j)) + ", " +
                std::to_string(std::max(i, j)) + ")");
    }
    // GSet weight w enters the coupling matrix as J = -w.
    edges.push_back({static_cast<std::int32_t>(i - 1),
                     static_cast<std::int32_t>(j - 1), -w});
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError(line_no, "unexpected content after " + std::to_string(m) +
                                  " edges");
  }

  try {
    return IsingProblem::from_edges(static_cast<std::int32_t>(n),
                                    std::move(edges), name, storage);
  } catch (const InvalidArgumentError& e) {
    throw ParseError(line_no, e.what());
  }
}

IsingProblem load_gset_file(const std::string& path, Storage storage) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string name = path;
  const std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  return parse_gset(in, name, storage);
}

void serialize_gset(const IsingProblem& problem, std::ostream& out) {
  out << problem.size() << ' ' << problem.edge_count() << '\n';
  char buffer[64];
  problem.for_each_edge([&](std::int32_t i, std::int32_t j, double coupling) {
    const double w = -coupling;
    if (problem.integer_weights()) {
      std::snprintf(buffer, sizeof buffer, "%.0f", w);
    } else {
      std::snprintf(buffer, sizeof buffer, "%.17g", w);
    }
    out << (i + 1) << ' ' << (j + 1) << ' ' << buffer << '\n';
  });
  if (!out) throw IoError("write failure while serializing instance");
}

void save_gset_file(const IsingProblem& problem, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  serialize_gset(problem, out);
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace simcim
