#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lme/numeric.hpp"
#include "lme/young.hpp"

namespace lme {

/// Multiset of irreducible components, keyed by diagram. Iteration is in
/// descending lexicographic order of the diagrams.
class Decomposition {
 public:
  using Map = std::map<Partition, BigInt, std::greater<>>;

  void add(const Partition& nu, const BigInt& mult);
  /// 0 when absent.
  BigInt multiplicity(const Partition& nu) const;
  const Map& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  Map entries_;
};

/// One row of a diagram expansion: the row length before the expansion and
/// the labels appended to its right, left to right.
struct LabeledRow {
  int base_length = 0;
  std::vector<int> labels;

  int length() const { return base_length + static_cast<int>(labels.size()); }
  friend bool operator==(const LabeledRow&, const LabeledRow&) = default;
};

/// A diagram expansion: `base` with labeled boxes appended row by row.
class LabeledDiagram {
 public:
  LabeledDiagram() = default;
  /// appended[r] holds the labels added to row r+1.
  LabeledDiagram(Partition base, std::vector<std::vector<int>> appended);

  const Partition& base() const { return base_; }
  const std::vector<LabeledRow>& rows() const { return rows_; }

  /// Row lengths after the expansion; not necessarily a partition.
  std::vector<int> final_lengths() const;
  /// Throws NotAPartition when the expansion is not a Young diagram.
  Partition final_shape() const;
  int max_label() const;

  friend bool operator==(const LabeledDiagram&, const LabeledDiagram&) = default;

 private:
  Partition base_;
  std::vector<LabeledRow> rows_;
};

std::string render_ascii(const LabeledDiagram& f);

/// Outcome of checking the five expansion conditions independently.
struct ValidationReport {
  bool young_shape = true;       // 1: a Young diagram after every label stage
  bool distinct_columns = true;  // 2: no label twice in one column
  bool row_counting = true;      // 3
  bool column_counting = true;   // 4: columns counted from the right
  bool row_bound = true;         // 5: at most m rows

  bool valid() const {
    return young_shape && distinct_columns && row_counting && column_counting && row_bound;
  }
  /// 1-based number of the first failing condition, 0 when valid.
  int first_failure() const;
};

/// m <= 0 disables condition 5.
ValidationReport validate_filling(const LabeledDiagram& f, int m);

/// Pass as m to run without the SU(m) row bound.
inline constexpr int kGeneralLinear = 0;

Decomposition lr_expand(const Partition& lambda, const Partition& eta, int m);
std::vector<LabeledDiagram> enumerate_lr_fillings(const Partition& lambda,
                                                  const Partition& eta, int m);

/// c^{lambda eta}_nu by the expansion rule above.
BigInt lr_coefficient(const Partition& lambda, const Partition& eta, const Partition& nu);

/// Number of LR skew tableaux of shape gamma/alpha with content beta
/// (row-by-row transfer with memoization; suited to large skew shapes).
BigInt lr_skew_coefficient(const Partition& gamma, const Partition& alpha,
                           const Partition& beta);

/// Independent reference: brute-force enumeration of semistandard skew
/// tableaux of shape nu/lambda, content eta, whose reverse reading word is a
/// lattice word.
BigInt lr_oracle_coefficient(const Partition& lambda, const Partition& eta,
                             const Partition& nu);

namespace detail {

/// Visits every valid expansion of lambda by eta, passing the appended
/// labels per row. `target`, when non-empty, restricts to expansions of that
/// final shape. Returning false from the visitor stops the walk.
void for_each_filling(const Partition& lambda, const Partition& eta, int m,
                      const Partition* target,
                      const std::function<bool(const std::vector<std::vector<int>>&)>& visit);

/// Histogram of final shapes without materializing the fillings. Shapes
/// with first row longer than max_width (when positive) are skipped.
Decomposition expand_counts(const Partition& lambda, const Partition& eta, int m,
                            int max_width = 0);

}  // namespace detail

}  // namespace lme
