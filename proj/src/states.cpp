#include "lme/states.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lme/errors.hpp"
#include "lme/generators.hpp"
#include "lme/kernel.hpp"

namespace lme {

StateVector::StateVector(int d, int n_parties)
    : StateVector(d, n_parties, std::vector<Rational>(static_cast<std::size_t>(std::max(d, 0)), Rational(1))) {}

StateVector::StateVector(int d, int n_parties, std::vector<Rational> site_norms2, Rational scale2)
    : d_(d), n_(n_parties), site_norms2_(std::move(site_norms2)), scale2_(std::move(scale2)) {
  if (d < 1 || n_parties < 1) throw Error("state needs positive d and N");
  if (site_norms2_.size() != static_cast<std::size_t>(d)) throw Error("site norms must have d entries");
  if (sgn(scale2_) <= 0) throw Error("scale must be positive");
}

std::uint64_t StateVector::dim() const {
  std::uint64_t total = 1;
  for (int p = 0; p < n_; ++p) total *= static_cast<std::uint64_t>(d_);
  return total;
}

GaussianRational StateVector::at(std::span<const int> digits) const {
  return at(encode_index(digits, d_));
}

GaussianRational StateVector::at(std::uint64_t flat) const {
  auto it = amp_.find(flat);
  return it == amp_.end() ? GaussianRational() : it->second;
}

void StateVector::add(std::span<const int> digits, const GaussianRational& v) {
  if (digits.size() != static_cast<std::size_t>(n_)) throw BadArity("multi-index has wrong length");
  for (int x : digits) {
    if (x < 0 || x >= d_) throw IndexOutOfRange("site index " + std::to_string(x) + " outside 0.." + std::to_string(d_ - 1));
  }
  add(encode_index(digits, d_), v);
}

void StateVector::add(std::uint64_t flat, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = amp_.try_emplace(flat, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) amp_.erase(it);
  }
}

void StateVector::set(std::uint64_t flat, const GaussianRational& v) {
  if (v.is_zero()) {
    amp_.erase(flat);
  } else {
    amp_[flat] = v;
  }
}

Rational StateVector::weight_of(std::uint64_t flat) const {
  Rational w = 1;
  for (int p = 0; p < n_; ++p) {
    w *= site_norms2_[static_cast<std::size_t>(flat % static_cast<std::uint64_t>(d_))];
    flat /= static_cast<std::uint64_t>(d_);
  }
  return w;
}

Rational StateVector::norm2() const {
  Rational total = 0;
  for (const auto& [x, a] : amp_) total += a.norm2() * weight_of(x);
  return total * scale2_;
}

StateVector& StateVector::operator+=(const StateVector& o) {
  if (o.d_ != d_ || o.n_ != n_ || o.site_norms2_ != site_norms2_ || o.scale2_ != scale2_) {
    throw Error("states live in different spaces");
  }
  for (const auto& [x, a] : o.amp_) add(x, a);
  return *this;
}

StateVector& StateVector::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    amp_.clear();
    return *this;
  }
  for (auto& [x, a] : amp_) a *= s;
  return *this;
}

namespace {

StateVector empty_like(const StateVector& psi) {
  return StateVector(psi.d(), psi.n_parties(), psi.site_norms2(), psi.scale2());
}

void check_site_op(const SparseOperator& op, const StateVector& psi) {
  if (op.dim() != static_cast<std::size_t>(psi.d())) throw Error("operator and state dimensions differ");
}

}  // namespace

StateVector apply_diagonal(const SparseOperator& op, const StateVector& psi, bool parallel) {
  check_site_op(op, psi);
  const int d = psi.d();
  const int n = psi.n_parties();
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(n), 1);
  for (int p = n - 2; p >= 0; --p) {
    stride[static_cast<std::size_t>(p)] = stride[static_cast<std::size_t>(p) + 1] * static_cast<std::uint64_t>(d);
  }
  const std::vector<std::pair<std::uint64_t, GaussianRational>> items(psi.amplitudes().begin(),
                                                                      psi.amplitudes().end());
  std::vector<std::vector<std::pair<std::uint64_t, GaussianRational>>> parts(items.size());
  auto apply = [&](std::size_t i) {
    const auto& [x, a] = items[i];
    const auto digits = decode_index(x, d, n);
    for (int p = 0; p < n; ++p) {
      const auto xp = static_cast<std::uint64_t>(digits[static_cast<std::size_t>(p)]);
      const std::uint64_t base = x - xp * stride[static_cast<std::size_t>(p)];
      for (const auto& [r, v] : op.column(xp)) {
        parts[i].emplace_back(base + r * stride[static_cast<std::size_t>(p)], v * a);
      }
    }
  };
  const long long count = static_cast<long long>(items.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i) apply(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) apply(static_cast<std::size_t>(i));
  }
  StateVector out = empty_like(psi);
  for (const auto& part : parts) {
    for (const auto& [y, v] : part) out.add(y, v);
  }
  return out;
}

StateVector apply_product(const SparseOperator& op, const StateVector& psi) {
  check_site_op(op, psi);
  const int d = psi.d();
  const int n = psi.n_parties();
  StateVector out = empty_like(psi);
  for (const auto& [x, a] : psi.amplitudes()) {
    const auto digits = decode_index(x, d, n);
    auto expand = [&](auto&& self, int p, std::uint64_t prefix, const GaussianRational& coeff) -> void {
      if (p == n) {
        out.add(prefix, coeff);
        return;
      }
      for (const auto& [r, v] : op.column(static_cast<std::size_t>(digits[static_cast<std::size_t>(p)]))) {
        self(self, p + 1, prefix * static_cast<std::uint64_t>(d) + r, coeff * v);
      }
    };
    expand(expand, 0, 0, a);
  }
  return out;
}

bool annihilated_by(const std::vector<SparseOperator>& ops, const StateVector& psi) {
  return std::all_of(ops.begin(), ops.end(),
                     [&](const SparseOperator& op) { return apply_diagonal(op, psi).is_zero(); });
}

std::vector<Rational> ReducedDensity::diagonal() const {
  std::vector<Rational> out;
  for (int s = 0; s < d; ++s) {
    const auto us = static_cast<std::size_t>(s);
    out.push_back(site_norms2[us] * scaled[us][us].re());
  }
  return out;
}

bool ReducedDensity::is_maximally_mixed() const {
  const Rational target(1, d);
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      const auto& v = scaled[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      if (s != t && !v.is_zero()) return false;
    }
  }
  const auto diag = diagonal();
  return std::all_of(diag.begin(), diag.end(), [&](const Rational& v) { return v == target; });
}

bool ReducedDensity::is_hermitian() const {
  for (std::size_t s = 0; s < scaled.size(); ++s) {
    for (std::size_t t = 0; t < scaled.size(); ++t) {
      if (!(scaled[s][t] == scaled[t][s].conj())) return false;
    }
  }
  return true;
}

Rational ReducedDensity::trace() const {
  const auto diag = diagonal();
  return std::accumulate(diag.begin(), diag.end(), Rational(0));
}

ReducedDensity reduced_density(const StateVector& psi, int k) {
  if (psi.is_zero()) throw ZeroState("reduced density of the zero state");
  if (k < 0 || k >= psi.n_parties()) {
    throw IndexOutOfRange("party " + std::to_string(k) + " outside 0.." + std::to_string(psi.n_parties() - 1));
  }
  const int d = psi.d();
  const int n = psi.n_parties();
  std::uint64_t stride = 1;
  for (int p = n - 1; p > k; --p) stride *= static_cast<std::uint64_t>(d);
  const auto ud = static_cast<std::uint64_t>(d);

  // Group amplitudes by the multi-index of the other parties.
  std::map<std::uint64_t, std::vector<std::pair<int, const GaussianRational*>>> by_rest;
  for (const auto& [x, a] : psi.amplitudes()) {
    const auto s = static_cast<int>((x / stride) % ud);
    const std::uint64_t rest = (x / (stride * ud)) * stride + x % stride;
    by_rest[rest].emplace_back(s, &a);
  }

  ReducedDensity rho;
  rho.d = d;
  rho.site_norms2 = psi.site_norms2();
  rho.scaled.assign(static_cast<std::size_t>(d), std::vector<GaussianRational>(static_cast<std::size_t>(d)));
  Rational total = 0;
  for (const auto& [rest, entries] : by_rest) {
    const auto s0 = static_cast<std::uint64_t>(entries.front().first);
    const std::uint64_t x0 = (rest / stride) * stride * ud + s0 * stride + rest % stride;
    const Rational w_rest = psi.weight_of(x0) / psi.site_norms2()[s0];
    for (const auto& [s, a] : entries) {
      for (const auto& [t, b] : entries) {
        rho.scaled[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] += *a * b->conj() * GaussianRational(w_rest);
      }
      total += a->norm2() * w_rest * psi.site_norms2()[static_cast<std::size_t>(s)];
    }
  }
  const GaussianRational inv(1 / total);
  for (auto& row : rho.scaled) {
    for (auto& v : row) v *= inv;
  }
  return rho;
}

bool is_lme(const StateVector& psi) {
  for (int k = 0; k < psi.n_parties(); ++k) {
    if (!reduced_density(psi, k).is_maximally_mixed()) return false;
  }
  return true;
}

StateVector trap_boson_state() {
  // Basis order: 200, 110, 101, 020, 011, 002. Coefficients carry a common
  // factor 1/(2 sqrt 2), so scale2 = 1/8.
  struct Term {
    std::array<int, 3> sites;
    long coeff;
  };
  const std::array<Term, 5> terms{{{{0, 3, 5}, 1},
                                   {{1, 2, 4}, 2},
                                   {{0, 4, 4}, -1},
                                   {{3, 2, 2}, -1},
                                   {{5, 1, 1}, -1}}};
  StateVector psi(6, 3, bosonic_site_norms2(3, 2), Rational(1, 8));
  for (const auto& term : terms) {
    std::array<int, 3> perm{0, 1, 2};
    do {
      const std::array<int, 3> digits{term.sites[static_cast<std::size_t>(perm[0])],
                                      term.sites[static_cast<std::size_t>(perm[1])],
                                      term.sites[static_cast<std::size_t>(perm[2])]};
      psi.add(digits, term.coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return psi;
}

std::array<StateVector, 3> so_n4_states(int d) {
  if (d < 3) throw UnsupportedDim("so(d) needs d >= 3");
  std::array<StateVector, 3> out{StateVector(d, 4), StateVector(d, 4), StateVector(d, 4)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const std::array<int, 4> ijji{i, j, j, i};
      out[0].add(ijji, 1);
      if (i == j) continue;
      out[1].add(std::array<int, 4>{i, j, i, j}, 1);
      out[1].add(ijji, -1);
      out[2].add(std::array<int, 4>{i, i, j, j}, 1);
      out[2].add(ijji, -1);
    }
  }
  return out;
}

StateVector antisym_state(int d, int k, int n_parties) {
  if (d < 2 || k < 1) throw Error("antisymmetric state needs d >= 2 and k >= 1");
  if (n_parties >= 0 && n_parties != k * d) {
    throw BadArity("N = " + std::to_string(n_parties) + " is not " + std::to_string(k) + " x " +
                   std::to_string(d));
  }
  // Levi-Civita block on d parties.
  std::vector<std::pair<std::uint64_t, long>> block;
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    block.emplace_back(encode_index(perm, d), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::uint64_t block_dim = 1;
  for (int p = 0; p < d; ++p) block_dim *= static_cast<std::uint64_t>(d);
  std::vector<std::pair<std::uint64_t, long>> current{{0, 1}};
  for (int b = 0; b < k; ++b) {
    std::vector<std::pair<std::uint64_t, long>> next;
    for (const auto& [x, s] : current) {
      for (const auto& [y, t] : block) next.emplace_back(x * block_dim + y, s * t);
    }
    current = std::move(next);
  }
  StateVector psi(d, k * d);
  for (const auto& [x, s] : current) psi.add(x, s);
  return psi;
}

std::size_t span_rank(const std::vector<StateVector>& states) {
  RowEchelon ech;
  for (const auto& s : states) ech.insert(SparseRow(s.amplitudes().begin(), s.amplitudes().end()));
  return ech.rank();
}

}  // namespace lme
