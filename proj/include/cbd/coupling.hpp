#pragma once

#include <vector>

#include "cbd/system.hpp"

namespace cbd {

/// Joint table of the multimaximal coupling of a two-variable connection.
/// Orientation: "first" is the variable from the content's own context,
/// "second" the one from the preceding context. pab = Pr(first=a, second=b).
struct CouplingTable {
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;

  double first_marginal() const { return p10 + p11; }
  double second_marginal() const { return p01 + p11; }
  /// Pr(first == second), maximal over all couplings of the marginals.
  double agreement() const { return p00 + p11; }
};

/// Multimaximal coupling of two binary variables with Pr(=1) equal to
/// p_first and p_second. The diagonal cells take the largest values the
/// marginals allow; throws std::invalid_argument outside [0, 1].
CouplingTable multimaximal_pair(double p_first, double p_second);

/// One coupling per content i, pairing the variable of context i with the
/// variable of context i-1.
std::vector<CouplingTable> connection_couplings(const CyclicSystem& system);

/// Expands a rank-n system into the rank-2n consistently connected system
/// whose bunch ring alternates the original bunches with the connection
/// couplings. The new ring fixes one canonical labeling: original bunch i
/// sits at position 2i, and position 2i+1 carries the coupling of the
/// content shared by contexts i and i+1, oriented (context i, context i+1).
CyclicSystem consistify(const CyclicSystem& system);

}  // namespace cbd
