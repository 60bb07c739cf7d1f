#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lme/sparse.hpp"

namespace lme {

/// E_{i,i+1}, E_{i+1,i} for i = 0..d-2, in that order. Requires d >= 2.
std::vector<SparseOperator> su_simple_root_ops(int d);
/// E_{i,j} for all i != j.
std::vector<SparseOperator> su_all_root_ops(int d);

/// E_j^+, E_j^- for j = 0..floor(d/2)-2, then the even or odd closing pair.
/// Throws UnsupportedDim for d < 3.
std::vector<SparseOperator> so_simple_root_ops(int d);
/// |a><b| - |b><a| for all a < b.
std::vector<SparseOperator> so_all_ops(int d);

/// Occupation tuples of n bosons in m modes, descending lexicographic.
std::vector<std::vector<int>> bosonic_basis(int m, int n);
/// prod_a n_a! per basis vector: squared norm of the unnormalized monomial.
std::vector<Rational> bosonic_site_norms2(int m, int n);
/// a_alpha^dag a_beta, a_beta^dag a_alpha for adjacent modes alpha < beta,
/// on the unnormalized monomial basis (integer entries).
std::vector<SparseOperator> bosonic_generator_ops(int m, int n);
/// a_alpha^dag a_beta for all alpha != beta.
std::vector<SparseOperator> bosonic_all_ops(int m, int n);

/// Change of site basis: columns of to_standard are the new basis vectors.
struct SiteBasis {
  SparseOperator to_standard;
  SparseOperator from_standard;
};

/// |2j> + i|2j+1>, |2j> - i|2j+1> (and |d-1> for odd d): the simple-root
/// Cartan elements are diagonal here.
SiteBasis so_weight_basis(int d);

enum class Group { su, so, boson };

std::string to_string(Group g);
/// "su", "so" or "boson".
Group parse_group(const std::string& name);

struct GeneratorSet {
  Group group = Group::su;
  int d = 0;
  std::vector<SparseOperator> ops;
  /// Squared norms of the site basis vectors (all 1 unless bosonic).
  std::vector<Rational> site_norms2;
  /// Basis in which the Cartan elements are diagonal, when not the standard one.
  std::optional<SiteBasis> weight_basis;
};

/// su: d = dim. so: d = dim. boson: dim = modes, bosons = n.
GeneratorSet make_generators(Group group, int dim, int bosons = 1, bool all_roots = false);

}  // namespace lme
