#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gatesimp/common.hpp"

namespace gatesimp {

struct Violation {
  VertexId u = 0;
  VertexId v = 0;
  std::int64_t expected = 0;
  std::int64_t observed = -1;  // -1: nothing found (no covering vertex, no route)
};

/// Outcome of one verification check. pass holds iff no violation was seen;
/// only the first kMaxListed violations are kept but all are counted.
struct VerificationReport {
  static constexpr std::size_t kMaxListed = 100;

  std::string check;
  bool pass = true;
  bool authoritative = true;  // false for sampled runs
  std::size_t pairs_checked = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::int64_t> counts;
  double elapsed_ms = 0;

  void add(Violation v) {
    pass = false;
    ++violation_count;
    if (violations.size() < kMaxListed) violations.push_back(v);
  }
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gatesimp
