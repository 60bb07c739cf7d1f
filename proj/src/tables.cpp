#include "lme/tables.hpp"

#include <algorithm>
#include <sstream>

#include "lme/errors.hpp"
#include "lme/generators.hpp"
#include "lme/kernel.hpp"
#include "lme/states.hpp"
#include "lme/telescope.hpp"

namespace lme {

namespace {

void check_ranges(int d_min, int d_max, int n_min, int n_max, int d_floor) {
  if (d_min < d_floor || d_max < d_min || n_min < 1 || n_max < n_min) {
    throw Error("bad table range: d " + std::to_string(d_min) + ".." + std::to_string(d_max) + ", N " +
                std::to_string(n_min) + ".." + std::to_string(n_max));
  }
}

}  // namespace

const TableCell& MultiplicityTable::at(int d, int n) const {
  if (d < d_min || d > d_max || n < n_min || n > n_max) throw IndexOutOfRange("cell outside table");
  return cells[static_cast<std::size_t>((d - d_min) * (n_max - n_min + 1) + (n - n_min))];
}

MultiplicityTable table_su(int d_min, int d_max, int n_min, int n_max, const PowerOptions& opts) {
  check_ranges(d_min, d_max, n_min, n_max, 2);
  MultiplicityTable t{1, d_min, d_max, n_min, n_max, {}};
  ProductCache cache;
  PowerOptions o = opts;
  if (o.cache == nullptr) o.cache = &cache;
  for (int d = d_min; d <= d_max; ++d) {
    for (int n = n_min; n <= n_max; ++n) {
      TableCell cell{d, n, std::nullopt, "unverified", std::nullopt, std::nullopt};
      try {
        cell.value = trivial_multiplicity({Partition{1}, d, n}, TrivialMethod::iterated, o);
        cell.method = "iterated-lr";
      } catch (const ResourceBound&) {
      }
      if (n % d == 0) cell.catalan = catalan_multidim(d, n / d);
      t.cells.push_back(std::move(cell));
    }
  }
  return t;
}

MultiplicityTable table_so(int d_min, int d_max, int n_min, int n_max, const SoTableOptions& opts) {
  check_ranges(d_min, d_max, n_min, n_max, 3);
  MultiplicityTable t{2, d_min, d_max, n_min, n_max, {}};
  for (int d = d_min; d <= d_max; ++d) {
    const GeneratorSet gens = make_generators(Group::so, d);
    for (int n = n_min; n <= n_max; ++n) {
      TableCell cell{d, n, std::nullopt, "unverified", std::nullopt, std::nullopt};
      try {
        KernelOptions ko;
        ko.max_dim = opts.max_dim;
        ko.parallel = opts.parallel;
        const auto basis = trivial_subspace(gens, n, ko);
        cell.value = BigInt(static_cast<unsigned long>(basis.size()));
        cell.method = "kernel";
        if (opts.check_lme) {
          cell.lme = std::all_of(basis.begin(), basis.end(), [](const StateVector& v) { return is_lme(v); });
        }
      } catch (const ResourceBound&) {
        if (d == 3) {
          cell.value = su2_singlet_multiplicity(3, n);
          cell.method = "su2-spin1";
        } else if (d % 2 == 0 && n % 2 == 1) {
          cell.value = BigInt(0);
          cell.method = "central-element";
        }
      }
      t.cells.push_back(std::move(cell));
    }
  }
  return t;
}

std::string render_ascii(const MultiplicityTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"d\\N"};
  for (int n = t.n_min; n <= t.n_max; ++n) header.push_back(std::to_string(n));
  grid.push_back(header);
  for (int d = t.d_min; d <= t.d_max; ++d) {
    std::vector<std::string> row{std::to_string(d)};
    for (int n = t.n_min; n <= t.n_max; ++n) {
      const auto& c = t.at(d, n);
      row.push_back(c.value ? c.value->get_str() : "?");
    }
    grid.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t j = 0; j < grid[r].size(); ++j) {
      if (j > 0) out << (j == 1 ? " | " : " ");
      out << std::string(width[j] - grid[r][j].size(), ' ') << grid[r][j];
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = width[0] + 3;
      for (std::size_t j = 1; j < width.size(); ++j) total += width[j] + (j > 1 ? 1 : 0);
      out << std::string(total, '-') << '\n';
    }
  }
  bool notes = false;
  for (const auto& c : t.cells) {
    if (c.method == "iterated-lr" || c.method == "kernel") continue;
    if (!notes) out << '\n';
    notes = true;
    out << "d=" << c.d << " N=" << c.n << ": "
        << (c.method == "unverified" ? "unverified (external source)" : c.method) << '\n';
  }
  return out.str();
}

bool SweepCase::ok() const {
  if (!plan_ok || !conditions_ok) return false;
  if (staircase && *staircase < 1) return false;
  if (iterated && *iterated < 1) return false;
  if (staircase && iterated && *staircase != *iterated) return false;
  return true;
}

std::vector<SweepCase> theorem_sweep(int n_min, int n_max, int max_part, const SweepOptions& opts) {
  if (n_min < 2 || n_max < n_min || max_part < 1) throw Error("bad sweep bounds");
  std::vector<SweepCase> cases;
  for (int n = n_min; n <= n_max; ++n) {
    for (const auto& lambda : partitions_in_box(n - 1, max_part)) {
      if (!lambda.empty()) cases.push_back({lambda, n, false, false, std::nullopt, std::nullopt, {}});
    }
  }
  auto run = [&](SweepCase& c) {
    try {
      execute_plan(build_expansion_plan(c.lambda, c.n));
      c.plan_ok = true;
    } catch (const ConditionViolation& e) {
      c.failure = "plan: " + std::string(e.what());
    }
    const ConditionReport rep = verify_conditions(c.lambda, c.n);
    c.conditions_ok = rep.ok();
    if (!rep.ok() && c.failure.empty()) c.failure = "conditions: " + rep.failures.front().check;
    PowerOptions po;
    po.parallel = false;
    const PowerQuery q{c.lambda, c.n, c.n};
    if (opts.staircase) c.staircase = trivial_multiplicity(q, TrivialMethod::staircase, po);
    if (opts.iterated) c.iterated = trivial_multiplicity(q, TrivialMethod::iterated, po);
    if (c.failure.empty() && !c.ok()) c.failure = "multiplicity";
  };
  const long long count = static_cast<long long>(cases.size());
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) run(cases[static_cast<std::size_t>(i)]);
  } else {
    for (long long i = 0; i < count; ++i) run(cases[static_cast<std::size_t>(i)]);
  }
  return cases;
}

}  // namespace lme
