#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "lme/lrcalc.hpp"
#include "lme/numeric.hpp"
#include "lme/young.hpp"

namespace lme {

/// (E^lambda)^{(x) N} over SU(m).
struct PowerQuery {
  Partition lambda;
  int m = 2;
  int n_parties = 1;
};

enum class TrivialMethod { iterated, staircase };

std::string to_string(TrivialMethod method);
TrivialMethod parse_trivial_method(const std::string& name);

/// Thread-safe memo of pairwise products mu (x) lambda, keyed by
/// (mu, lambda, m, width bound).
class ProductCache {
 public:
  Decomposition product(const Partition& mu, const Partition& lambda, int m, int max_width);
  size_t size() const;
  void clear();

 private:
  using Key = std::tuple<Partition, Partition, int, int>;
  mutable std::shared_mutex mutex_;
  std::map<Key, Decomposition> memo_;
};

struct PowerOptions {
  /// Upper bound on distinct diagrams alive after any multiplication step.
  size_t max_diagrams = 1'000'000;
  /// Multiply the diagrams of one step with OpenMP; the serial path is the
  /// reference the parallel one is tested against.
  bool parallel = true;
  /// Shared across queries when set; a query-local cache otherwise.
  ProductCache* cache = nullptr;
};

/// Throws TooManyRows / Error when the query is malformed.
void check_query(const PowerQuery& q);

Decomposition tensor_power_decompose(const PowerQuery& q, const PowerOptions& opts = {});

BigInt trivial_multiplicity(const PowerQuery& q, TrivialMethod method,
                            const PowerOptions& opts = {});

/// m divides N * |lambda|.
bool necessary_condition(const PowerQuery& q);

/// Skew shape gamma/alpha made of n copies of lambda placed corner to corner,
/// each copy up and to the right of the previous one.
struct Staircase {
  Partition alpha;
  Partition gamma;
};
Staircase fulton_staircase(const Partition& lambda, int n);

/// (kd)! prod_{i<k} i!/(d+i)!.
BigInt catalan_multidim(int d, int k);

/// Enumerates label sequences with every label 1..d used k times and each
/// prefix holding at least as many (n-1)'s as n's.
BigInt dyck_sequence_count(int d, int k, int max_length = 20);

/// Spin-0 multiplicity in the N-fold product of spin (d-1)/2.
BigInt su2_singlet_multiplicity(int d, int n_parties);

}  // namespace lme
