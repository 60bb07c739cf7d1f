#pragma once

#include <string>
#include <vector>

#include "lme/lrcalc.hpp"
#include "lme/young.hpp"

namespace lme {

/// Rows touched by label m in step k of the N-party construction:
/// first row, number of rows, last row (1-based, end = beg + len - 1).
struct RowSpan {
  int beg = 0;
  int len = 0;
  int end = 0;
  friend bool operator==(const RowSpan&, const RowSpan&) = default;
};

/// Throws IndexOutOfRange unless 1 <= m <= N-1 and 1 <= k <= N.
RowSpan beg_len_end(int m, int k, int n_parties);

/// Column of box counts (label p, length q), listed top to bottom:
/// (lambda_{p+q-1}, lambda_{p+q-2} - lambda_{p+q-1}, ..., lambda_p - lambda_{p+1}).
struct Telescope {
  int label = 0;
  int length = 0;
  std::vector<int> entries;
};

std::vector<int> telescope_entries(int p, int q, const Partition& lambda);
Telescope make_telescope(int p, int q, const Partition& lambda);
/// r-th entry counted from the bottom, 0 outside 1..q.
int telescope_entry(int p, int q, int r, const Partition& lambda);

/// Boxes with label n appended to row i in step k, read off the telescopes.
int boxes_added(int n, int k, int i, const Partition& lambda, int n_parties);

/// Which closed form covers (n, k, i).
enum class BoxDomain { A1, A2, B1, B2, none };
BoxDomain box_domain(int n, int k, int i, int n_parties);
/// The same count from the four piecewise closed forms.
int boxes_added_piecewise(int n, int k, int i, const Partition& lambda, int n_parties);

struct LabelBlock {
  int label = 0;
  RowSpan rows;
  /// counts[j] boxes go to row rows.beg + j.
  std::vector<int> counts;
};

struct PlanStep {
  int k = 0;
  std::vector<LabelBlock> blocks;  // labels 1..N-1 in order
};

/// The explicit sequence of N expansions that turns the empty diagram into
/// the rectangle (|lambda|)^N, one copy of lambda per step.
struct ExpansionPlan {
  int n_parties = 0;
  Partition lambda;
  std::vector<PlanStep> steps;
};

/// Throws TooManyRows when lambda has N rows or more.
ExpansionPlan build_expansion_plan(const Partition& lambda, int n_parties);

struct ExecutionResult {
  Partition final_shape;
  /// One expansion per step, relative to the shape entering that step.
  std::vector<LabeledDiagram> trace;
};

/// Applies the plan and validates every step; throws ConditionViolation on
/// the first failed step.
ExecutionResult execute_plan(const ExpansionPlan& plan);

/// Row length difference of rows i and i+1 after steps 1..k-1.
int delta(int i, int k, const Partition& lambda, int n_parties);
/// Offset between the label-(m-1) block in row i and the label-m block in
/// row i+1 within step k (boxes left-aligned).
int small_delta(int i, int k, int m, const Partition& lambda, int n_parties);

struct ConditionFailure {
  std::string check;
  int i = 0;
  int k = 0;
  int m = 0;
};

struct ConditionReport {
  bool nonnegative_delta = true;    // Delta >= 0
  bool delta_dominates = true;      // Delta >= delta(m)
  bool row_counting = true;         // on the simulated trace
  bool column_counting = true;      // on the simulated trace
  bool trace_shapes = true;         // conditions 1, 2 and 5 on the trace
  bool formula_matches_trace = true;
  bool rectangular = true;
  std::vector<ConditionFailure> failures;

  bool ok() const {
    return nonnegative_delta && delta_dominates && row_counting && column_counting &&
           trace_shapes && formula_matches_trace && rectangular;
  }
};

ConditionReport verify_conditions(const Partition& lambda, int n_parties);

}  // namespace lme
