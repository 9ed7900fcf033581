#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbd {

/// Sparse constraint column: parallel row-index / value arrays.
struct SparseColumn {
  std::vector<std::int32_t> rows;
  std::vector<double> values;

  void clear() {
    rows.clear();
    values.clear();
  }
  void push(std::int32_t row, double value) {
    rows.push_back(row);
    values.push_back(value);
  }
  std::size_t size() const { return rows.size(); }
};

/// Column access to a constraint matrix. Lets large 0/1 matrices stay
/// implicit: the solver only ever asks for one column at a time.
class ColumnSource {
 public:
  virtual ~ColumnSource() = default;
  virtual std::int64_t num_columns() const = 0;
  virtual int num_rows() const = 0;
  virtual void fetch(std::int64_t column, SparseColumn& out) const = 0;
};

/// Materialized columns, for small problems and tests.
class DenseColumnSource final : public ColumnSource {
 public:
  DenseColumnSource(int rows, std::vector<SparseColumn> columns)
      : rows_(rows), columns_(std::move(columns)) {}

  /// Builds from a row-major dense matrix.
  static std::shared_ptr<DenseColumnSource> from_dense(
      const std::vector<std::vector<double>>& matrix);

  std::int64_t num_columns() const override {
    return static_cast<std::int64_t>(columns_.size());
  }
  int num_rows() const override { return rows_; }
  void fetch(std::int64_t column, SparseColumn& out) const override {
    out = columns_[column];
  }

 private:
  int rows_;
  std::vector<SparseColumn> columns_;
};

enum class RowKind : unsigned char { kEq, kLe };
enum class Sense : unsigned char { kMinimize, kMaximize };

/// objective^T x optimized over { x >= 0 : rows hold }, columns supplied by
/// a ColumnSource.
struct LpProblem {
  Sense sense = Sense::kMinimize;
  std::vector<double> objective;
  std::shared_ptr<const ColumnSource> columns;
  std::vector<RowKind> row_kinds;
  std::vector<double> rhs;
};

enum class LpStatus : unsigned char {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kNumericalFailure,
};

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;      // structural variables only
  double objective = 0.0;     // in the problem's own sense
  int iterations = 0;         // simplex pivots, both phases
  int phase1_iterations = 0;
  double max_violation = 0.0;          // from the post-solve re-check
  std::int64_t columns_fixed = 0;      // variables fixed to 0 by presolve
};

struct LpOptions {
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  /// Variables provably (within presolve_tol) zero in every feasible point
  /// are fixed before the solve.
  bool presolve = true;
  double presolve_tol = 1e-12;
  int max_iterations = 500000;
  int refactor_interval = 64;
  /// Candidate-list size for multiple pricing; 1 disables the list.
  int pricing_block = 48;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(LpStatus status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  LpStatus status() const { return status_; }

 private:
  LpStatus status_;
};

/// Swappable solver backend; the bundled implementation is a revised
/// simplex.
class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual LpSolution solve(const LpProblem& problem) const = 0;
};

class SimplexBackend final : public LpBackend {
 public:
  SimplexBackend() = default;
  explicit SimplexBackend(LpOptions options) : options_(options) {}
  LpSolution solve(const LpProblem& problem) const override;

 private:
  LpOptions options_;
};

/// Solves with the bundled simplex backend.
LpSolution solve(const LpProblem& problem, const LpOptions& options = {});

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> witness;   // nonnegative solution of A x = rhs when feasible
  double infeasibility = 0.0;    // phase-one artificial optimum
};

/// Phase-one test for { x >= 0 : A x = rhs }.
FeasibilityResult feasible(std::shared_ptr<const ColumnSource> columns,
                           const std::vector<double>& rhs, double tol = 1e-9,
                           const LpOptions& options = {});

}  // namespace cbd
