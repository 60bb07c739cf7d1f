#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lme/gaussian.hpp"

namespace lme {

/// Default cap on the N-party Hilbert-space dimension d^N.
inline constexpr std::uint64_t kDefaultDimCap = 20000;

/// d^N, throwing ResourceBound when it exceeds cap.
std::uint64_t checked_power(std::uint64_t d, int n, std::uint64_t cap);

/// Square sparse matrix over GaussianRational. Stored by column; explicit
/// zeros are never kept.
class SparseOperator {
 public:
  using Column = std::map<std::size_t, GaussianRational>;

  explicit SparseOperator(std::size_t dim = 0) : cols_(dim) {}
  static SparseOperator identity(std::size_t dim);

  std::size_t dim() const { return cols_.size(); }
  std::size_t nnz() const;

  void set(std::size_t row, std::size_t col, const GaussianRational& v);
  void add(std::size_t row, std::size_t col, const GaussianRational& v);
  GaussianRational at(std::size_t row, std::size_t col) const;
  const Column& column(std::size_t col) const { return cols_.at(col); }

  SparseOperator transpose() const;
  SparseOperator adjoint() const;
  bool is_diagonal() const;

  SparseOperator& operator+=(const SparseOperator& o);
  SparseOperator& operator-=(const SparseOperator& o);
  SparseOperator& operator*=(const GaussianRational& s);

  friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
  friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
  friend SparseOperator operator*(SparseOperator a, const GaussianRational& s) { return a *= s; }
  friend SparseOperator operator*(const GaussianRational& s, SparseOperator a) { return a *= s; }
  /// Matrix product.
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

 private:
  void check(std::size_t row, std::size_t col) const;
  std::vector<Column> cols_;
};

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

/// A (x) 1 (x) ... (x) 1 + ... + 1 (x) ... (x) 1 (x) A on (C^dim)^{(x) N},
/// party 1 most significant in the flat index.
SparseOperator diagonal_action(const SparseOperator& op, int n_parties,
                               std::uint64_t cap = kDefaultDimCap, bool parallel = true);

/// Big-endian base-d digits of a flat index and back.
std::vector<int> decode_index(std::uint64_t flat, int d, int n_parties);
std::uint64_t encode_index(std::span<const int> digits, int d);

}  // namespace lme
