#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lme/numeric.hpp"

namespace lme {

/// A Young diagram: non-increasing positive row lengths, no trailing zeros.
///
/// Rows are numbered from 1 (top) in the accessors that take a row number;
/// `row(j)` returns 0 for any j past the last row, so expressions such as
/// lambda_{p} - lambda_{p+1} work without bounds juggling.
class Partition {
 public:
  Partition() = default;

  /// Accepts trailing zeros; throws NotAPartition on increasing parts or a
  /// nonpositive part followed by a positive one.
  explicit Partition(std::span<const int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 1-based row length, 0 outside the diagram.
  int row(int j) const {
    return (j >= 1 && j <= rows()) ? parts_[static_cast<size_t>(j - 1)] : 0;
  }
  /// lambda_{p,q} := lambda_p - lambda_q.
  int diff(int p, int q) const { return row(p) - row(q); }

  int weight() const;

  /// "5.3.2"; the empty diagram is "".
  std::string key() const;
  static Partition from_key(const std::string& key);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

Partition make_partition(std::span<const int> parts);
Partition transpose(const Partition& lambda);
int weight(const Partition& lambda);

/// Dimension of the SU(m) irrep E^lambda by the hook-content formula.
BigInt irrep_dim(const Partition& lambda, int m);

/// True for the empty diagram and for rectangles with exactly m rows.
bool is_trivial_for(const Partition& lambda, int m);

/// Strips full columns of height m.
Partition reduce_mod(const Partition& lambda, int m);

/// inner is a subdiagram of outer.
bool contains(const Partition& outer, const Partition& inner);

/// (width)^height.
Partition rectangle(int width, int height);

std::string render_ascii(const Partition& lambda);

/// All partitions with at most max_rows rows and parts at most max_part,
/// including the empty one, in descending lexicographic order.
std::vector<Partition> partitions_in_box(int max_rows, int max_part);

/// All partitions of n with at most max_rows rows.
std::vector<Partition> partitions_of(int n, int max_rows);

}  // namespace lme
