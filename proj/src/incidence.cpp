#include "cbd/incidence.hpp"

#include <sstream>
#include <stdexcept>

namespace cbd {
namespace {

void check_rank(int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  if (rank > kDenseRankCap) {
    std::ostringstream msg;
    msg << "dense incidence matrix limited to rank " << kDenseRankCap
        << " (2^" << 2 * rank << " columns requested); use the implicit "
        << "column interface instead";
    throw std::length_error(msg.str());
  }
}

std::string pair_label(int rank, int a, int b) {
  return "{" + variable_name(rank, a) + "=1," + variable_name(rank, b) + "=1}";
}

}  // namespace

std::uint64_t column_count(int rank) {
  if (rank < 2 || rank > 31) throw std::invalid_argument("rank out of range");
  return std::uint64_t{1} << (2 * rank);
}

bool column_assigns_one(int rank, std::uint64_t column, int var) {
  const int bits = 2 * rank;
  std::uint64_t flipped = ~column & (column_count(rank) - 1);
  return (flipped >> (bits - 1 - var)) & 1u;
}

std::uint32_t column_assignment(int rank, std::uint64_t column) {
  const int bits = 2 * rank;
  std::uint64_t flipped = ~column & (column_count(rank) - 1);
  std::uint32_t mask = 0;
  for (int k = 0; k < bits; ++k) {
    mask |= static_cast<std::uint32_t>((flipped >> (bits - 1 - k)) & 1u) << k;
  }
  return mask;
}

std::pair<int, int> bunch_pair(int /*rank*/, int context) {
  return {2 * context, 2 * context + 1};
}

std::pair<int, int> coupling_pair(int rank, int content) {
  int prev = (content + rank - 1) % rank;
  return {2 * content, 2 * prev + 1};
}

std::string variable_name(int rank, int var) {
  int context = var / 2;
  int content = (var % 2 == 0) ? context : (context + 1) % rank;
  std::ostringstream name;
  name << "S_" << content + 1 << "^" << context + 1;
  return name.str();
}

IncidenceMatrix::IncidenceMatrix(int rank, std::uint64_t columns, int rows)
    : rank_(rank),
      columns_(columns),
      words_(rows, std::vector<std::uint64_t>((columns + 63) / 64, 0)),
      labels_(rows) {}

std::string IncidenceMatrix::row_string(int row) const {
  std::string out(columns_, '0');
  for (std::uint64_t v = 0; v < columns_; ++v) {
    if (bit(row, v)) out[v] = '1';
  }
  return out;
}

IncidenceMatrix build_full(int rank) {
  check_rank(rank);
  const std::uint64_t cols = column_count(rank);
  IncidenceMatrix m(rank, cols, 12 * rank);

  // Quadruple cell order (0,0),(1,0),(0,1),(1,1): first variable fastest.
  static constexpr int kCell[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};

  int row = 0;
  m.blocks_.l_begin = row;
  for (int i = 0; i < rank; ++i) {
    for (int var : {2 * i, 2 * i + 1}) {
      for (int value = 0; value < 2; ++value) {
        m.labels_[row] = "{" + variable_name(rank, var) + "=" + std::to_string(value) + "}";
        for (std::uint64_t v = 0; v < cols; ++v) {
          if (column_assigns_one(rank, v, var) == (value == 1)) m.set_bit(row, v);
        }
        ++row;
      }
    }
  }
  m.blocks_.l_end = m.blocks_.b_begin = row;
  for (int i = 0; i < rank; ++i) {
    auto [a, b] = bunch_pair(rank, i);
    for (const auto& cell : kCell) {
      m.labels_[row] = "{" + variable_name(rank, a) + "=" + std::to_string(cell[0]) +
                       "," + variable_name(rank, b) + "=" + std::to_string(cell[1]) + "}";
      for (std::uint64_t v = 0; v < cols; ++v) {
        if (column_assigns_one(rank, v, a) == (cell[0] == 1) &&
            column_assigns_one(rank, v, b) == (cell[1] == 1)) {
          m.set_bit(row, v);
        }
      }
      ++row;
    }
  }
  m.blocks_.b_end = m.blocks_.c_begin = row;
  for (int i = 0; i < rank; ++i) {
    auto [a, b] = coupling_pair(rank, i);
    for (const auto& cell : kCell) {
      m.labels_[row] = "{" + variable_name(rank, a) + "=" + std::to_string(cell[0]) +
                       "," + variable_name(rank, b) + "=" + std::to_string(cell[1]) + "}";
      for (std::uint64_t v = 0; v < cols; ++v) {
        if (column_assigns_one(rank, v, a) == (cell[0] == 1) &&
            column_assigns_one(rank, v, b) == (cell[1] == 1)) {
          m.set_bit(row, v);
        }
      }
      ++row;
    }
  }
  m.blocks_.c_end = row;
  return m;
}

IncidenceMatrix build_reduced(int rank) {
  check_rank(rank);
  const std::uint64_t cols = column_count(rank);
  IncidenceMatrix m(rank, cols, 4 * rank);

  int row = 0;
  m.blocks_.l_begin = row;
  for (int var = 0; var < 2 * rank; ++var) {
    m.labels_[row] = "{" + variable_name(rank, var) + "=1}";
    for (std::uint64_t v = 0; v < cols; ++v) {
      if (column_assigns_one(rank, v, var)) m.set_bit(row, v);
    }
    ++row;
  }
  m.blocks_.l_end = m.blocks_.b_begin = row;
  for (int i = 0; i < rank; ++i) {
    auto [a, b] = bunch_pair(rank, i);
    m.labels_[row] = pair_label(rank, a, b);
    for (std::uint64_t v = 0; v < cols; ++v) {
      if (column_assigns_one(rank, v, a) && column_assigns_one(rank, v, b)) {
        m.set_bit(row, v);
      }
    }
    ++row;
  }
  m.blocks_.b_end = m.blocks_.c_begin = row;
  for (int i = 0; i < rank; ++i) {
    auto [a, b] = coupling_pair(rank, i);
    m.labels_[row] = pair_label(rank, a, b);
    for (std::uint64_t v = 0; v < cols; ++v) {
      if (column_assigns_one(rank, v, a) && column_assigns_one(rank, v, b)) {
        m.set_bit(row, v);
      }
    }
    ++row;
  }
  m.blocks_.c_end = row;
  return m;
}

}  // namespace cbd
