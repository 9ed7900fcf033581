#include "cbd/coupling.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbd {

CouplingTable multimaximal_pair(double p_first, double p_second) {
  if (!(p_first >= 0.0 && p_first <= 1.0) || !(p_second >= 0.0 && p_second <= 1.0)) {
    throw std::invalid_argument("multimaximal_pair: probabilities must lie in [0, 1]");
  }
  CouplingTable t;
  t.p11 = std::min(p_first, p_second);
  t.p00 = std::min(1.0 - p_first, 1.0 - p_second);
  t.p01 = p_second - t.p11;
  t.p10 = p_first - t.p11;
  return t;
}

std::vector<CouplingTable> connection_couplings(const CyclicSystem& system) {
  Marginals m = marginals(system);
  std::vector<CouplingTable> out;
  out.reserve(system.rank);
  for (int i = 0; i < system.rank; ++i) {
    out.push_back(multimaximal_pair(m.first_of(i), m.second_of(system.prev(i))));
  }
  return out;
}

CyclicSystem consistify(const CyclicSystem& system) {
  require_valid(system);
  const int n = system.rank;
  Marginals m = marginals(system);

  CyclicSystem out;
  out.rank = 2 * n;
  out.bunches.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    out.bunches[2 * i] = system.bunches[i];
    // Coupling of the content shared by contexts i and i+1, oriented so
    // that the variable recorded in context i comes first. This is the
    // transpose of the (own-context first) orientation.
    CouplingTable c = multimaximal_pair(m.second_of(i), m.first_of(system.next(i)));
    out.bunches[2 * i + 1] = BunchTable{c.p00, c.p01, c.p10, c.p11};
  }

  if (system.labels) {
    SystemLabels labels;
    labels.contents.reserve(2 * n);
    labels.contexts.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
      const auto& q = system.labels->contents;
      const auto& c = system.labels->contexts;
      labels.contents.push_back(q[i] + "@" + c[i]);
      labels.contents.push_back(q[system.next(i)] + "@" + c[i]);
      labels.contexts.push_back(c[i]);
      labels.contexts.push_back(q[system.next(i)]);
    }
    out.labels = std::move(labels);
  }
  return out;
}

}  // namespace cbd
