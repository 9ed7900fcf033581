#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbd/system.hpp"

namespace cbd {

/// Largest rank for which the dense 0/1 matrices are materialized
/// (2^20 columns). Solvers use the implicit column interface below and are
/// not bound by this cap.
inline constexpr int kDenseRankCap = 10;

/// Number of coupling-value columns, 2^(2n). Throws above 2^62.
std::uint64_t column_count(int rank);

/// Value taken by coupling variable `var` (0-based canonical order) in
/// column `column`. Columns enumerate all assignments of the 2n variables
/// lexicographically with value 1 preceding value 0, so column 0 assigns
/// every variable 1.
bool column_assigns_one(int rank, std::uint64_t column, int var);

/// All 2n variable values of a column at once; bit k = value of variable k.
std::uint32_t column_assignment(int rank, std::uint64_t column);

/// Variable indices of the event pairs, canonical order:
/// bunch pair of context i = (2i, 2i+1); coupling pair of content i =
/// (2i, second variable of the preceding context).
std::pair<int, int> bunch_pair(int rank, int context);
std::pair<int, int> coupling_pair(int rank, int content);

/// 0/1 incidence matrix over the coupling-value columns, rows packed as
/// bits. Row blocks cover, in order, single-variable events, bunch events,
/// and connection-coupling events.
class IncidenceMatrix {
 public:
  struct BlockIndex {
    int l_begin = 0, l_end = 0;  // single-variable rows
    int b_begin = 0, b_end = 0;  // bunch rows
    int c_begin = 0, c_end = 0;  // coupling rows
  };

  IncidenceMatrix(int rank, std::uint64_t columns, int rows);

  int rank() const { return rank_; }
  std::uint64_t columns() const { return columns_; }
  int rows() const { return static_cast<int>(labels_.size()); }
  const BlockIndex& blocks() const { return blocks_; }
  const std::vector<std::string>& row_labels() const { return labels_; }

  bool bit(int row, std::uint64_t column) const {
    return (words_[row][column >> 6] >> (column & 63)) & 1u;
  }
  /// Canonical rendering: the row as a string of '0'/'1' characters.
  std::string row_string(int row) const;

 private:
  friend IncidenceMatrix build_full(int rank);
  friend IncidenceMatrix build_reduced(int rank);

  void set_bit(int row, std::uint64_t column) {
    words_[row][column >> 6] |= std::uint64_t{1} << (column & 63);
  }

  int rank_;
  std::uint64_t columns_;
  std::vector<std::vector<std::uint64_t>> words_;
  std::vector<std::string> labels_;
  BlockIndex blocks_;
};

/// Full matrix: 12n rows (variable value pairs, bunch quadruples, coupling
/// quadruples) in the order of FullDescription::concatenated().
IncidenceMatrix build_full(int rank);

/// Reduced matrix: 4n rows ({R=1} per variable, {both=1} per context,
/// {both=1} per content) in the order of ReducedDescription::concatenated().
IncidenceMatrix build_reduced(int rank);

/// "S_j^i" display name of a coupling variable, 1-based indices.
std::string variable_name(int rank, int var);

}  // namespace cbd
