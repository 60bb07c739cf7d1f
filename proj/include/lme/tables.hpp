#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lme/numeric.hpp"
#include "lme/powerdecomp.hpp"
#include "lme/sparse.hpp"

namespace lme {

/// One multiplicity cell. value is empty when no available method reaches it.
struct TableCell {
  int d = 0;
  int n = 0;
  std::optional<BigInt> value;
  /// "iterated-lr", "kernel", "su2-spin1", "central-element" or "unverified".
  std::string method;
  /// SU tables: d-dimensional Catalan number when d divides N.
  std::optional<BigInt> catalan;
  /// SO kernel cells: every basis vector passed is_lme.
  std::optional<bool> lme;
};

struct MultiplicityTable {
  int id = 0;
  int d_min = 0;
  int d_max = 0;
  int n_min = 0;
  int n_max = 0;
  std::vector<TableCell> cells;  // row-major in d, then N

  const TableCell& at(int d, int n) const;
};

/// Trivial multiplicity of SU(d) in (C^d)^{(x) N} by iterated LR products.
MultiplicityTable table_su(int d_min, int d_max, int n_min, int n_max,
                           const PowerOptions& opts = {});

struct SoTableOptions {
  std::uint64_t max_dim = kDefaultDimCap;
  /// Run is_lme on every kernel basis vector.
  bool check_lme = false;
  bool parallel = true;
};

/// Trivial multiplicity of SO(d) in (C^d)^{(x) N}: exact kernels up to
/// max_dim, spin-1 singlets for d = 3, and 0 for even d and odd N (-1 acts
/// as -1). Anything else is left unverified.
MultiplicityTable table_so(int d_min, int d_max, int n_min, int n_max,
                           const SoTableOptions& opts = {});

std::string render_ascii(const MultiplicityTable& t);

/// One (lambda, N) case of the constructive sweep, with m = N.
struct SweepCase {
  Partition lambda;
  int n = 0;
  /// execute_plan passed and reached the rectangle.
  bool plan_ok = false;
  /// verify_conditions found no failure.
  bool conditions_ok = false;
  std::optional<BigInt> staircase;
  std::optional<BigInt> iterated;
  /// First failure, empty when everything passed.
  std::string failure;

  bool ok() const;
};

struct SweepOptions {
  bool staircase = true;
  bool iterated = false;
  bool parallel = true;
};

/// Every nonempty lambda with at most N-1 rows and parts at most max_part,
/// for N = n_min..n_max, in (N, descending lambda) order.
std::vector<SweepCase> theorem_sweep(int n_min, int n_max, int max_part, const SweepOptions& opts = {});

}  // namespace lme
