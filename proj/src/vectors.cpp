#include "cbd/vectors.hpp"

#include <algorithm>

namespace cbd {
namespace {

std::vector<double> concat(const std::vector<double>& a,
                           const std::vector<double>& b,
                           const std::vector<double>& c) {
  std::vector<double> out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

std::vector<double> FullDescription::concatenated() const {
  return concat(variables, bunches, couplings);
}

std::vector<double> ReducedDescription::concatenated() const {
  return concat(marginal, bunch_both, coupling_both);
}

FullDescription full_description(const CyclicSystem& system) {
  require_valid(system);
  FullDescription full;
  full.variables.reserve(4 * system.rank);
  full.bunches.reserve(4 * system.rank);
  full.couplings.reserve(4 * system.rank);
  for (const BunchTable& t : system.bunches) {
    double pa = t.first_marginal();
    double pb = t.second_marginal();
    full.variables.insert(full.variables.end(), {1.0 - pa, pa, 1.0 - pb, pb});
    full.bunches.insert(full.bunches.end(), {t.p00, t.p10, t.p01, t.p11});
  }
  for (const CouplingTable& t : connection_couplings(system)) {
    full.couplings.insert(full.couplings.end(), {t.p00, t.p10, t.p01, t.p11});
  }
  return full;
}

ReducedDescription reduced_description(const CyclicSystem& system) {
  Marginals m = marginals(system);
  ReducedDescription reduced;
  reduced.marginal = m.p;
  reduced.bunch_both.reserve(system.rank);
  for (const BunchTable& t : system.bunches) reduced.bunch_both.push_back(t.p11);
  reduced.coupling_both.reserve(system.rank);
  for (int i = 0; i < system.rank; ++i) {
    reduced.coupling_both.push_back(
        std::min(m.first_of(i), m.second_of(system.prev(i))));
  }
  return reduced;
}

ExpectationVectors expectation_transform(const ReducedDescription& reduced) {
  const int n = static_cast<int>(reduced.bunch_both.size());
  ExpectationVectors exp;
  exp.variable.reserve(2 * n);
  for (double p : reduced.marginal) exp.variable.push_back(2.0 * p - 1.0);
  exp.bunch.reserve(n);
  exp.connection.reserve(n);
  for (int i = 0; i < n; ++i) {
    exp.bunch.push_back(product_expectation(
        reduced.bunch_both[i], reduced.marginal[2 * i], reduced.marginal[2 * i + 1]));
    int prev = (i + n - 1) % n;
    exp.connection.push_back(product_expectation(
        reduced.coupling_both[i], reduced.marginal[2 * i], reduced.marginal[2 * prev + 1]));
  }
  return exp;
}

ReducedDescription expectation_inverse(const ExpectationVectors& exp) {
  const int n = static_cast<int>(exp.bunch.size());
  ReducedDescription reduced;
  reduced.marginal.reserve(2 * n);
  for (double e : exp.variable) reduced.marginal.push_back((e + 1.0) / 2.0);
  reduced.bunch_both.reserve(n);
  reduced.coupling_both.reserve(n);
  for (int i = 0; i < n; ++i) {
    reduced.bunch_both.push_back(joint_from_expectation(
        exp.bunch[i], reduced.marginal[2 * i], reduced.marginal[2 * i + 1]));
    int prev = (i + n - 1) % n;
    reduced.coupling_both.push_back(joint_from_expectation(
        exp.connection[i], reduced.marginal[2 * i], reduced.marginal[2 * prev + 1]));
  }
  return reduced;
}

}  // namespace cbd
