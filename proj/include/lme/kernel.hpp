#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lme/generators.hpp"
#include "lme/sparse.hpp"
#include "lme/states.hpp"

namespace lme {

using SparseRow = std::map<std::uint64_t, GaussianRational>;

/// Incremental exact row reduction over GaussianRational. Every stored row
/// has leading entry 1 at its pivot; the lowest column of an incoming row
/// becomes its pivot.
class RowEchelon {
 public:
  /// Reduces row against the current pivots; true if it was independent.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }
  /// Clears every pivot column from the other rows.
  void reduce();
  const std::map<std::uint64_t, SparseRow>& pivots() const { return pivots_; }
  /// Basis of the null space over columns 0..n_cols-1; call reduce() first.
  /// One vector per free column f, with entry 1 at f.
  std::vector<SparseRow> nullspace(std::uint64_t n_cols) const;

 private:
  std::map<std::uint64_t, SparseRow> pivots_;
};

struct KernelOptions {
  std::uint64_t max_dim = kDefaultDimCap;
  /// Solve only over multi-indices of total weight zero. Used when the
  /// commutators of consecutive generator pairs are diagonal.
  bool restrict_to_zero_weight = true;
  bool parallel = true;
};

struct KernelInfo {
  std::uint64_t unknowns = 0;
  std::uint64_t equations = 0;
  std::uint64_t rank = 0;
  bool zero_weight = false;
};

/// Exact basis of the joint kernel of the diagonal actions of ops on N
/// parties, in reduced echelon form over the flat multi-index order.
/// With a site basis the equations are solved in that basis and the result
/// is mapped back. Throws ResourceBound when d^N exceeds max_dim.
std::vector<StateVector> trivial_subspace(std::span<const SparseOperator> ops, int n_parties,
                                          const KernelOptions& opts = {},
                                          const std::optional<SiteBasis>& basis = std::nullopt,
                                          KernelInfo* info = nullptr);
std::vector<StateVector> trivial_subspace(const GeneratorSet& gens, int n_parties,
                                          const KernelOptions& opts = {},
                                          KernelInfo* info = nullptr);

/// Reduced echelon basis of the span, pivot entries 1, ascending pivots.
std::vector<StateVector> canonicalize(const std::vector<StateVector>& states);

}  // namespace lme
