#include "lme/kernel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>

#include "lme/errors.hpp"

namespace lme {

namespace {

void axpy(SparseRow& row, const GaussianRational& factor, const SparseRow& other) {
  auto hint = row.begin();
  for (const auto& [c, v] : other) {
    GaussianRational term = factor * v;
    hint = row.lower_bound(c);
    if (hint == row.end() || hint->first != c) {
      hint = row.emplace_hint(hint, c, std::move(term));
    } else {
      hint->second += term;
      if (hint->second.is_zero()) hint = row.erase(hint);
    }
  }
}

}  // namespace

bool RowEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto p = pivots_.find(lead->first);
    if (p == pivots_.end()) {
      const GaussianRational inv = GaussianRational(1) / lead->second;
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead->first, std::move(row));
      return true;
    }
    axpy(row, -lead->second, p->second);
  }
  return false;
}

void RowEchelon::reduce() {
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow& row = it->second;
    auto e = row.upper_bound(it->first);
    while (e != row.end()) {
      const std::uint64_t c = e->first;
      auto q = pivots_.find(c);
      if (q == pivots_.end()) {
        ++e;
        continue;
      }
      // Rows at higher pivots are already reduced, so this only touches
      // column c and free columns.
      axpy(row, -e->second, q->second);
      e = row.upper_bound(c);
    }
  }
}

std::vector<SparseRow> RowEchelon::nullspace(std::uint64_t n_cols) const {
  std::map<std::uint64_t, SparseRow> free;
  for (std::uint64_t c = 0; c < n_cols; ++c) {
    if (!pivots_.contains(c)) free[c][c] = 1;
  }
  for (const auto& [pc, row] : pivots_) {
    for (const auto& [c, v] : row) {
      if (c == pc) continue;
      free.at(c)[pc] = -v;
    }
  }
  std::vector<SparseRow> out;
  out.reserve(free.size());
  for (auto& [c, v] : free) out.push_back(std::move(v));
  return out;
}

namespace {

SparseOperator conjugate(const SparseOperator& op, const SiteBasis& b) {
  return b.from_standard * op * b.to_standard;
}

// Per-site weights under each consecutive generator pair, when every
// [ops[2j], ops[2j+1]] is diagonal with integer entries.
std::optional<std::vector<std::vector<long>>> site_weights(std::span<const SparseOperator> ops) {
  if (ops.empty() || ops.size() % 2 != 0) return std::nullopt;
  const std::size_t d = ops.front().dim();
  std::vector<std::vector<long>> w(d);
  for (std::size_t j = 0; j + 1 < ops.size(); j += 2) {
    const SparseOperator h = commutator(ops[j], ops[j + 1]);
    if (!h.is_diagonal()) return std::nullopt;
    for (std::size_t s = 0; s < d; ++s) {
      const GaussianRational v = h.at(s, s);
      if (sgn(v.im()) != 0 || v.re().get_den() != 1 || !v.re().get_num().fits_slong_p()) {
        return std::nullopt;
      }
      w[s].push_back(v.re().get_num().get_si());
    }
  }
  return w;
}

// Multi-indices of total weight zero, ascending.
std::vector<std::uint64_t> zero_weight_indices(const std::vector<std::vector<long>>& w, int n_parties) {
  const int d = static_cast<int>(w.size());
  const std::size_t r = w.front().size();
  // Largest |weight| per component, for pruning.
  std::vector<long> reach(r, 0);
  for (const auto& ws : w) {
    for (std::size_t j = 0; j < r; ++j) reach[j] = std::max(reach[j], std::abs(ws[j]));
  }
  std::vector<std::uint64_t> out;
  std::vector<long> sum(r, 0);
  auto walk = [&](auto&& self, int p, std::uint64_t prefix) -> void {
    const long left = n_parties - p;
    for (std::size_t j = 0; j < r; ++j) {
      if (std::abs(sum[j]) > left * reach[j]) return;
    }
    if (p == n_parties) {
      out.push_back(prefix);
      return;
    }
    for (int s = 0; s < d; ++s) {
      for (std::size_t j = 0; j < r; ++j) sum[j] += w[static_cast<std::size_t>(s)][j];
      self(self, p + 1, prefix * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(s));
      for (std::size_t j = 0; j < r; ++j) sum[j] -= w[static_cast<std::size_t>(s)][j];
    }
  };
  walk(walk, 0, 0);
  return out;
}

using Contribution = std::tuple<std::uint32_t, std::uint64_t, GaussianRational>;

}  // namespace

std::vector<StateVector> trivial_subspace(std::span<const SparseOperator> ops, int n_parties,
                                          const KernelOptions& opts,
                                          const std::optional<SiteBasis>& basis, KernelInfo* info) {
  if (ops.empty()) throw Error("trivial_subspace needs at least one generator");
  if (n_parties < 1) throw Error("N must be positive");
  const std::size_t d = ops.front().dim();
  for (const auto& op : ops) {
    if (op.dim() != d) throw Error("generators must share one dimension");
  }
  const std::uint64_t total = checked_power(d, n_parties, opts.max_dim);

  std::vector<SparseOperator> work(ops.begin(), ops.end());
  if (basis) {
    for (auto& op : work) op = conjugate(op, *basis);
  }

  std::vector<std::uint64_t> unknowns;
  std::optional<std::vector<std::vector<long>>> weights;
  if (opts.restrict_to_zero_weight) weights = site_weights(work);
  if (weights) {
    unknowns = zero_weight_indices(*weights, n_parties);
  } else {
    unknowns.resize(total);
    for (std::uint64_t x = 0; x < total; ++x) unknowns[x] = x;
  }

  std::vector<std::uint64_t> stride(static_cast<std::size_t>(n_parties), 1);
  for (int p = n_parties - 2; p >= 0; --p) {
    stride[static_cast<std::size_t>(p)] = stride[static_cast<std::size_t>(p) + 1] * d;
  }

  // Column c of the stacked system: every generator applied to unknown c.
  std::vector<std::vector<Contribution>> cols(unknowns.size());
  auto apply = [&](std::size_t c) {
    const std::uint64_t x = unknowns[c];
    const auto digits = decode_index(x, static_cast<int>(d), n_parties);
    auto& out = cols[c];
    for (std::size_t g = 0; g < work.size(); ++g) {
      for (int p = 0; p < n_parties; ++p) {
        const auto xp = static_cast<std::uint64_t>(digits[static_cast<std::size_t>(p)]);
        const std::uint64_t base = x - xp * stride[static_cast<std::size_t>(p)];
        for (const auto& [r, v] : work[g].column(xp)) {
          out.emplace_back(static_cast<std::uint32_t>(g), base + r * stride[static_cast<std::size_t>(p)], v);
        }
      }
    }
  };
  const long long n_cols = static_cast<long long>(unknowns.size());
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long c = 0; c < n_cols; ++c) apply(static_cast<std::size_t>(c));
  } else {
    for (long long c = 0; c < n_cols; ++c) apply(static_cast<std::size_t>(c));
  }

  std::map<std::pair<std::uint32_t, std::uint64_t>, SparseRow> rows;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (auto& [g, y, v] : cols[c]) {
      auto& row = rows[{g, y}];
      auto [it, inserted] = row.try_emplace(c, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
      }
    }
    cols[c].clear();
    cols[c].shrink_to_fit();
  }

  // Sparsest rows first keeps fill-in low; the basis is canonicalized below,
  // so the insertion order does not affect the result.
  std::vector<SparseRow*> order;
  for (auto& [key, row] : rows) {
    if (!row.empty()) order.push_back(&row);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const SparseRow* a, const SparseRow* b) { return a->size() < b->size(); });
  RowEchelon ech;
  const std::uint64_t equations = order.size();
  for (SparseRow* row : order) ech.insert(std::move(*row));
  ech.reduce();

  std::vector<StateVector> raw;
  for (const auto& v : ech.nullspace(unknowns.size())) {
    StateVector psi(static_cast<int>(d), n_parties);
    for (const auto& [c, a] : v) psi.add(unknowns[c], a);
    raw.push_back(basis ? apply_product(basis->to_standard, psi) : std::move(psi));
  }
  if (info != nullptr) {
    *info = {unknowns.size(), equations, ech.rank(), weights.has_value()};
  }
  return canonicalize(raw);
}

std::vector<StateVector> trivial_subspace(const GeneratorSet& gens, int n_parties,
                                          const KernelOptions& opts, KernelInfo* info) {
  auto states = trivial_subspace(gens.ops, n_parties, opts, gens.weight_basis, info);
  std::vector<StateVector> out;
  out.reserve(states.size());
  for (const auto& s : states) {
    StateVector psi(gens.d, n_parties, gens.site_norms2);
    for (const auto& [x, a] : s.amplitudes()) psi.set(x, a);
    out.push_back(std::move(psi));
  }
  return out;
}

std::vector<StateVector> canonicalize(const std::vector<StateVector>& states) {
  if (states.empty()) return {};
  RowEchelon ech;
  for (const auto& s : states) {
    ech.insert(SparseRow(s.amplitudes().begin(), s.amplitudes().end()));
  }
  ech.reduce();
  const auto& first = states.front();
  std::vector<StateVector> out;
  for (const auto& [pc, row] : ech.pivots()) {
    StateVector psi(first.d(), first.n_parties(), first.site_norms2(), first.scale2());
    for (const auto& [x, a] : row) psi.set(x, a);
    out.push_back(std::move(psi));
  }
  return out;
}

}  // namespace lme
