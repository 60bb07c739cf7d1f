#include "lme/telescope.hpp"

#include "lme/errors.hpp"

namespace lme {

namespace {

void check_range(const char* name, int v, int lo, int hi) {
  if (v < lo || v > hi) {
    throw IndexOutOfRange(std::string(name) + "=" + std::to_string(v) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

RowSpan beg_len_end(int m, int k, int n_parties) {
  check_range("m", m, 1, n_parties - 1);
  check_range("k", k, 1, n_parties);
  if (k <= n_parties - m) return {m, k, m + k - 1};
  return {m + 1, n_parties - m, n_parties};
}

int telescope_entry(int p, int q, int r, const Partition& lambda) {
  if (r >= 1 && r < q) return lambda.diff(p + r - 1, p + r);
  if (r >= 1 && r == q) return lambda.row(p + q - 1);
  return 0;
}

std::vector<int> telescope_entries(int p, int q, const Partition& lambda) {
  std::vector<int> out;
  for (int r = q; r >= 1; --r) out.push_back(telescope_entry(p, q, r, lambda));
  return out;
}

Telescope make_telescope(int p, int q, const Partition& lambda) {
  return {p, q, telescope_entries(p, q, lambda)};
}

int boxes_added(int n, int k, int i, const Partition& lambda, int n_parties) {
  if (k >= 1 && k <= n_parties - n) return telescope_entry(n, k, n + k - i, lambda);
  if (k > n_parties - n && k <= n_parties) {
    return telescope_entry(n, n_parties - n, n_parties - i + 1, lambda);
  }
  return 0;
}

BoxDomain box_domain(int n, int k, int i, int n_parties) {
  const int N = n_parties;
  if (n < 1 || n > N || k < 1 || k > N || i < 1 || i > N) return BoxDomain::none;
  if (1 + i - n <= k && k <= N - n) {
    if (n < i) return BoxDomain::A1;
    if (n == i) return BoxDomain::A2;
  }
  if (N - n < k) {
    if (n + 1 < i) return BoxDomain::B1;
    if (n + 1 == i) return BoxDomain::B2;
  }
  return BoxDomain::none;
}

int boxes_added_piecewise(int n, int k, int i, const Partition& lambda, int n_parties) {
  const int N = n_parties;
  switch (box_domain(n, k, i, N)) {
    case BoxDomain::A1:
      return lambda.diff(2 * n + k - i - 1, 2 * n + k - i);
    case BoxDomain::A2:
      return lambda.row(n + k - 1);
    case BoxDomain::B1:
      return lambda.diff(n + N - i, n + N - i + 1);
    case BoxDomain::B2:
      return lambda.row(N - 1);
    case BoxDomain::none:
      break;
  }
  return 0;
}

ExpansionPlan build_expansion_plan(const Partition& lambda, int n_parties) {
  if (n_parties < 1) throw Error("N must be positive");
  if (lambda.rows() > n_parties - 1) {
    throw TooManyRows("lambda must have at most N-1 = " + std::to_string(n_parties - 1) +
                      " rows");
  }
  ExpansionPlan plan{n_parties, lambda, {}};
  for (int k = 1; k <= n_parties; ++k) {
    PlanStep step{k, {}};
    for (int m = 1; m <= n_parties - 1; ++m) {
      LabelBlock block{m, beg_len_end(m, k, n_parties), {}};
      for (int row = block.rows.beg; row <= block.rows.end; ++row) {
        block.counts.push_back(boxes_added(m, k, row, lambda, n_parties));
      }
      step.blocks.push_back(std::move(block));
    }
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

namespace {

// Runs the plan, handing each step's expansion and report to `on_step`.
template <class OnStep>
std::vector<int> simulate(const ExpansionPlan& plan, OnStep&& on_step) {
  const int N = plan.n_parties;
  std::vector<int> shape(static_cast<size_t>(N), 0);
  for (const auto& step : plan.steps) {
    std::vector<std::vector<int>> appended(static_cast<size_t>(N));
    for (const auto& block : step.blocks) {
      for (size_t j = 0; j < block.counts.size(); ++j) {
        auto& row = appended[static_cast<size_t>(block.rows.beg - 1) + j];
        row.insert(row.end(), static_cast<size_t>(block.counts[j]), block.label);
      }
    }
    // The entering shape is a partition whenever the previous step passed.
    std::vector<int> base = shape;
    while (!base.empty() && base.back() == 0) base.pop_back();
    bool base_ok = true;
    for (size_t r = 1; r < base.size(); ++r) base_ok = base_ok && base[r - 1] >= base[r];
    if (!base_ok) throw ConditionViolation(step.k, 1, "entering shape is not a Young diagram");
    LabeledDiagram expansion(Partition(base), appended);
    const ValidationReport rep = validate_filling(expansion, N);
    on_step(step.k, shape, expansion, rep);
    const auto lengths = expansion.final_lengths();
    for (size_t r = 0; r < shape.size(); ++r) shape[r] = r < lengths.size() ? lengths[r] : 0;
  }
  return shape;
}

}  // namespace

ExecutionResult execute_plan(const ExpansionPlan& plan) {
  ExecutionResult result;
  const auto shape = simulate(plan, [&](int k, const std::vector<int>&,
                                        const LabeledDiagram& expansion,
                                        const ValidationReport& rep) {
    if (!rep.valid()) {
      const int c = rep.first_failure();
      throw ConditionViolation(k, c, "step " + std::to_string(k) + " violates condition " +
                                         std::to_string(c));
    }
    result.trace.push_back(expansion);
  });
  result.final_shape = Partition(shape);
  if (result.final_shape != rectangle(plan.lambda.weight(), plan.n_parties)) {
    throw ConditionViolation(plan.n_parties, 5, "final shape " + result.final_shape.key() +
                                                    " is not the rectangle");
  }
  return result;
}

int delta(int i, int k, const Partition& lambda, int n_parties) {
  check_range("i", i, 1, n_parties - 1);
  check_range("k", k, 1, n_parties);
  int total = 0;
  for (int n = 1; n <= i + 1; ++n) {
    for (int s = 1; s <= k - 1; ++s) {
      total += boxes_added(n, s, i, lambda, n_parties) -
               boxes_added(n, s, i + 1, lambda, n_parties);
    }
  }
  return total;
}

int small_delta(int i, int k, int m, const Partition& lambda, int n_parties) {
  check_range("i", i, 1, n_parties - 1);
  check_range("k", k, 1, n_parties);
  check_range("m", m, 1, n_parties - 1);
  int total = 0;
  for (int n = 1; n <= m; ++n) total += boxes_added(n, k, i + 1, lambda, n_parties);
  for (int n = 1; n <= m - 1; ++n) total -= boxes_added(n, k, i, lambda, n_parties);
  return total;
}

ConditionReport verify_conditions(const Partition& lambda, int n_parties) {
  const int N = n_parties;
  ConditionReport rep;
  auto fail = [&](bool& flag, const char* what, int i, int k, int m) {
    flag = false;
    if (rep.failures.size() < 32) rep.failures.push_back({what, i, k, m});
  };

  for (int k = 1; k <= N; ++k) {
    for (int i = 1; i <= N - 1; ++i) {
      const int d = delta(i, k, lambda, N);
      if (d < 0) fail(rep.nonnegative_delta, "Delta >= 0", i, k, 0);
      for (int m = 1; m <= N - 1; ++m) {
        if (d < small_delta(i, k, m, lambda, N)) fail(rep.delta_dominates, "Delta >= delta(m)", i, k, m);
      }
    }
  }

  const ExpansionPlan plan = build_expansion_plan(lambda, N);
  std::vector<int> final_shape;
  try {
    final_shape = simulate(plan, [&](int k, const std::vector<int>& entering,
                                     const LabeledDiagram&, const ValidationReport& v) {
      for (int i = 1; i <= N - 1; ++i) {
        const int measured = entering[static_cast<size_t>(i - 1)] - entering[static_cast<size_t>(i)];
        if (measured != delta(i, k, lambda, N)) {
          fail(rep.formula_matches_trace, "Delta equals simulated row difference", i, k, 0);
        }
      }
      if (!v.row_counting) fail(rep.row_counting, "row counting", 0, k, 0);
      if (!v.column_counting) fail(rep.column_counting, "column counting", 0, k, 0);
      if (!v.young_shape || !v.distinct_columns || !v.row_bound) {
        fail(rep.trace_shapes, "trace shape", 0, k, 0);
      }
    });
  } catch (const ConditionViolation& e) {
    fail(rep.trace_shapes, "trace shape", 0, e.step(), 0);
    return rep;
  }
  for (int v : final_shape) {
    if (v != lambda.weight()) fail(rep.rectangular, "final rectangle", 0, N, 0);
  }
  return rep;
}

}  // namespace lme
