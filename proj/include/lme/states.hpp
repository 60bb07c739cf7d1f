#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "lme/gaussian.hpp"
#include "lme/sparse.hpp"

namespace lme {

/// Vector in (C^d)^{(x) N} by big-endian flat multi-index. The site basis
/// vectors may be orthogonal but not normalized: site_norms2[s] = <s|s>.
/// The physical vector is sqrt(scale2) * sum amp[x] |x>.
class StateVector {
 public:
  using Amplitudes = std::map<std::uint64_t, GaussianRational>;

  StateVector() = default;
  StateVector(int d, int n_parties);
  StateVector(int d, int n_parties, std::vector<Rational> site_norms2, Rational scale2 = 1);

  int d() const { return d_; }
  int n_parties() const { return n_; }
  const Amplitudes& amplitudes() const { return amp_; }
  const std::vector<Rational>& site_norms2() const { return site_norms2_; }
  const Rational& scale2() const { return scale2_; }
  std::uint64_t dim() const;

  GaussianRational at(std::span<const int> digits) const;
  GaussianRational at(std::uint64_t flat) const;
  void add(std::span<const int> digits, const GaussianRational& v);
  void add(std::uint64_t flat, const GaussianRational& v);
  void set(std::uint64_t flat, const GaussianRational& v);

  bool is_zero() const { return amp_.empty(); }
  /// prod_p site_norms2[x_p].
  Rational weight_of(std::uint64_t flat) const;
  /// <psi|psi>, including scale2.
  Rational norm2() const;

  StateVector& operator+=(const StateVector& o);
  StateVector& operator*=(const GaussianRational& s);
  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.amp_ == b.amp_ && a.site_norms2_ == b.site_norms2_ &&
           a.scale2_ == b.scale2_;
  }

 private:
  int d_ = 0;
  int n_ = 0;
  Amplitudes amp_;
  std::vector<Rational> site_norms2_;
  Rational scale2_ = 1;
};

/// (A (x) 1 ... + ... + 1 ... (x) A) psi without forming the big operator.
StateVector apply_diagonal(const SparseOperator& op, const StateVector& psi, bool parallel = true);
/// op^{(x) N} psi.
StateVector apply_product(const SparseOperator& op, const StateVector& psi);
bool annihilated_by(const std::vector<SparseOperator>& ops, const StateVector& psi);

/// rho_k of psi in the site basis. rho[s][t] = sqrt(w_s w_t) * scaled[s][t],
/// so the matrix stays exact when the site basis is not normalized.
struct ReducedDensity {
  int d = 0;
  std::vector<std::vector<GaussianRational>> scaled;
  std::vector<Rational> site_norms2;

  /// Diagonal entries of rho (always rational).
  std::vector<Rational> diagonal() const;
  /// rho == identity / d exactly.
  bool is_maximally_mixed() const;
  bool is_hermitian() const;
  Rational trace() const;
};

/// Party index k is 0-based. Throws ZeroState or IndexOutOfRange.
ReducedDensity reduced_density(const StateVector& psi, int k);
bool is_lme(const StateVector& psi);

/// The three-trap, two-boson, three-mode state with symmetrizer expanded,
/// on the unnormalized monomial basis.
StateVector trap_boson_state();

/// sum |i,j,j,i>; sum_{i!=j} (|i,j,i,j> - |i,j,j,i>); sum_{i!=j} (|i,i,j,j> - |i,j,j,i>).
std::array<StateVector, 3> so_n4_states(int d);

/// k-fold product of d-party antisymmetrizers on N = kd parties. Throws
/// BadArity when n_parties is given and differs from kd.
StateVector antisym_state(int d, int k, int n_parties = -1);

/// Dimension of the span, by exact elimination.
std::size_t span_rank(const std::vector<StateVector>& states);

}  // namespace lme
