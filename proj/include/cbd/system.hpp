#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cbd {

/// Joint distribution of the two binary variables recorded in one context.
/// Entry pab = Pr(first = a, second = b). "first" is the variable whose
/// content index equals the context index; "second" belongs to the
/// cyclically next content.
struct BunchTable {
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;

  double sum() const { return p00 + p01 + p10 + p11; }
  /// Pr(first = 1)
  double first_marginal() const { return p10 + p11; }
  /// Pr(second = 1)
  double second_marginal() const { return p01 + p11; }
};

struct SystemLabels {
  std::vector<std::string> contents;
  std::vector<std::string> contexts;
};

/// Cyclic system of binary random variables: n contexts over n contents,
/// context i recording the content pair (i, i+1 mod n).
struct CyclicSystem {
  int rank = 0;
  std::vector<BunchTable> bunches;
  std::optional<SystemLabels> labels;

  int next(int i) const { return (i + 1) % rank; }
  int prev(int i) const { return (i + rank - 1) % rank; }
};

/// Pr(R = 1) for all 2n variables in canonical context-major order:
/// first and second variable of context 0, of context 1, and so on.
struct Marginals {
  std::vector<double> p;

  double first_of(int context) const { return p[2 * context]; }
  double second_of(int context) const { return p[2 * context + 1]; }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Default tolerance for hand-entered tables (empirical data is rounded).
inline constexpr double kUserDataTol = 1e-6;
/// Default tolerance for programmatically generated systems.
inline constexpr double kGeneratedDataTol = 1e-12;

/// Checks rank/bunch-count agreement, entry ranges and unit sums.
/// Never throws; failures are listed in the report.
ValidationReport validate(const CyclicSystem& system, double tol = kUserDataTol);

/// Throws std::invalid_argument with the first violation if invalid.
void require_valid(const CyclicSystem& system, double tol = kUserDataTol);

Marginals marginals(const CyclicSystem& system);

/// True iff for every content the two contexts recording it agree on
/// Pr(R = 1) within tol.
bool is_consistently_connected(const CyclicSystem& system, double tol = 1e-9);

enum class GenMode {
  kArbitrary,   // each bunch uniform on the 3-simplex
  kConsistent,  // one marginal per content, joint sampled inside the Frechet interval
};

/// Deterministic in (rank, seed, mode).
CyclicSystem random_cyclic_system(int rank, std::uint64_t seed, GenMode mode);

const char* to_string(GenMode mode);

}  // namespace cbd
