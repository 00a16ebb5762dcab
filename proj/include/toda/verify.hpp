#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toda/state.hpp"

namespace toda {

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured residual/indicator
  double tolerance = 0.0;  // pass iff value <= tolerance
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Draws a generic state: a_i in [0.3, 2.5], b_i in [-1.5, 1.5].
TodaPhasePoint random_state(int n, class Rng& rng);

SuiteReport verify_core(int n, std::uint64_t seed);
SuiteReport verify_dynamics(int n, std::uint64_t seed);
SuiteReport verify_orbit_suite(int n, std::uint64_t seed);
SuiteReport verify_quantization(int n, std::uint64_t seed);
SuiteReport verify_spectral(std::uint64_t seed);
SuiteReport verify_coherent(int n, std::uint64_t seed);
SuiteReport verify_finrep(int n, std::uint64_t seed);

/// Every suite; quadrature-heavy suites clamp n to keep runtimes desk-scale.
std::vector<SuiteReport> verify_all(int n, std::uint64_t seed);

}  // namespace toda
