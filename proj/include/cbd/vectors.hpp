#pragma once

#include <vector>

#include "cbd/coupling.hpp"
#include "cbd/system.hpp"

namespace cbd {

/// Event-probability vectors describing a system. Quadruples are ordered
/// (0,0), (1,0), (0,1), (1,1) with the pair's first variable varying
/// fastest; variable pairs are ordered (value 0, value 1).
struct FullDescription {
  /// 4n entries: Pr(first=0), Pr(first=1), Pr(second=0), Pr(second=1)
  /// per context.
  std::vector<double> variables;
  /// 4n entries: one quadruple per context over (first, second).
  std::vector<double> bunches;
  /// 4n entries: one quadruple per content over the coupled pair
  /// (own context, preceding context).
  std::vector<double> couplings;

  /// variables, bunches, couplings concatenated (12n entries).
  std::vector<double> concatenated() const;
};

/// Minimal linearly independent reduction of the full description.
struct ReducedDescription {
  /// 2n entries: Pr(R = 1) per variable, canonical order.
  std::vector<double> marginal;
  /// n entries: Pr(first=1, second=1) per context.
  std::vector<double> bunch_both;
  /// n entries: Pr(both coupled variables = 1) per content.
  std::vector<double> coupling_both;

  /// marginal, bunch_both, coupling_both concatenated (4n entries).
  std::vector<double> concatenated() const;
};

/// The same data in -1/1 expectation coordinates.
struct ExpectationVectors {
  std::vector<double> variable;    // 2n, e = 2p - 1
  std::vector<double> bunch;       // n, product expectation per context
  std::vector<double> connection;  // n, product expectation per content
};

FullDescription full_description(const CyclicSystem& system);
ReducedDescription reduced_description(const CyclicSystem& system);

/// Affine map p -> e; exact up to floating rounding.
ExpectationVectors expectation_transform(const ReducedDescription& reduced);
/// Exact inverse of expectation_transform.
ReducedDescription expectation_inverse(const ExpectationVectors& exp);

/// Product expectation from a joint-1 probability and the two marginals.
inline double product_expectation(double p_both, double p_a, double p_b) {
  return 4.0 * p_both - 2.0 * p_a - 2.0 * p_b + 1.0;
}
/// Inverse of product_expectation in its first argument.
inline double joint_from_expectation(double e, double p_a, double p_b) {
  return (e + 2.0 * p_a + 2.0 * p_b - 1.0) / 4.0;
}

}  // namespace cbd
