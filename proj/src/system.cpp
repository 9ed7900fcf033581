#include "cbd/system.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cbd {
namespace {

// Uniform double in [0, 1) from explicit engine bits, so generated systems
// are identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_entry(int bunch, const char* name, double value, double tol,
                 ValidationReport& report) {
  if (!(value >= -tol && value <= 1.0 + tol) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "bunch " << bunch << ": " << name << " = " << value
        << " outside [0, 1]";
    report.ok = false;
    report.violations.push_back(msg.str());
  }
}

}  // namespace

ValidationReport validate(const CyclicSystem& system, double tol) {
  ValidationReport report;
  if (system.rank < 2) {
    report.ok = false;
    report.violations.push_back("rank must be at least 2");
  }
  if (static_cast<int>(system.bunches.size()) != system.rank) {
    std::ostringstream msg;
    msg << "expected " << system.rank << " bunches, got "
        << system.bunches.size();
    report.ok = false;
    report.violations.push_back(msg.str());
    return report;
  }
  for (int i = 0; i < system.rank; ++i) {
    const BunchTable& t = system.bunches[i];
    check_entry(i, "p00", t.p00, tol, report);
    check_entry(i, "p01", t.p01, tol, report);
    check_entry(i, "p10", t.p10, tol, report);
    check_entry(i, "p11", t.p11, tol, report);
    if (std::abs(t.sum() - 1.0) > tol) {
      std::ostringstream msg;
      msg << "bunch " << i << ": probabilities sum to " << t.sum()
          << ", not 1";
      report.ok = false;
      report.violations.push_back(msg.str());
    }
  }
  if (system.labels) {
    if (static_cast<int>(system.labels->contents.size()) != system.rank ||
        static_cast<int>(system.labels->contexts.size()) != system.rank) {
      report.ok = false;
      report.violations.push_back("labels must list one content and one context per rank");
    }
  }
  return report;
}

void require_valid(const CyclicSystem& system, double tol) {
  ValidationReport report = validate(system, tol);
  if (!report.ok) {
    throw std::invalid_argument("invalid cyclic system: " + report.violations.front());
  }
}

Marginals marginals(const CyclicSystem& system) {
  require_valid(system);
  Marginals m;
  m.p.reserve(2 * system.rank);
  for (const BunchTable& t : system.bunches) {
    m.p.push_back(t.first_marginal());
    m.p.push_back(t.second_marginal());
  }
  return m;
}

bool is_consistently_connected(const CyclicSystem& system, double tol) {
  Marginals m = marginals(system);
  for (int i = 0; i < system.rank; ++i) {
    // Content i is recorded as "first" in context i and as "second" in the
    // preceding context.
    double a = m.first_of(i);
    double b = m.second_of(system.prev(i));
    if (std::abs(a - b) > tol) return false;
  }
  return true;
}

CyclicSystem random_cyclic_system(int rank, std::uint64_t seed, GenMode mode) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  // Distinct streams per mode so alternating callers do not overlap draws.
  std::mt19937_64 rng(seed ^ (mode == GenMode::kConsistent ? 0x9e3779b97f4a7c15ull : 0ull));

  CyclicSystem system;
  system.rank = rank;
  system.bunches.reserve(rank);

  if (mode == GenMode::kArbitrary) {
    for (int i = 0; i < rank; ++i) {
      // Sorted-uniform gaps are uniform on the 3-simplex.
      std::array<double, 3> u = {uniform01(rng), uniform01(rng), uniform01(rng)};
      std::sort(u.begin(), u.end());
      BunchTable t;
      t.p00 = u[0];
      t.p01 = u[1] - u[0];
      t.p10 = u[2] - u[1];
      t.p11 = 1.0 - u[2];
      system.bunches.push_back(t);
    }
    return system;
  }

  std::vector<double> content_marginal(rank);
  for (int i = 0; i < rank; ++i) content_marginal[i] = uniform01(rng);
  for (int i = 0; i < rank; ++i) {
    double pa = content_marginal[i];
    double pb = content_marginal[(i + 1) % rank];
    double lo = std::max(0.0, pa + pb - 1.0);
    double hi = std::min(pa, pb);
    double p11 = lo + uniform01(rng) * (hi - lo);
    BunchTable t;
    t.p11 = p11;
    t.p10 = pa - p11;
    t.p01 = pb - p11;
    t.p00 = 1.0 - pa - pb + p11;
    system.bunches.push_back(t);
  }
  return system;
}

const char* to_string(GenMode mode) {
  return mode == GenMode::kArbitrary ? "arbitrary" : "consistent";
}

}  // namespace cbd
