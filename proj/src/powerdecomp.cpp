#include "lme/powerdecomp.hpp"

#include <exception>
#include <functional>
#include <vector>

#include "lme/errors.hpp"

namespace lme {

std::string to_string(TrivialMethod method) {
  return method == TrivialMethod::iterated ? "iterated" : "staircase";
}

TrivialMethod parse_trivial_method(const std::string& name) {
  if (name == "iterated") return TrivialMethod::iterated;
  if (name == "staircase") return TrivialMethod::staircase;
  throw Error("unknown method '" + name + "' (expected iterated|staircase)");
}

Decomposition ProductCache::product(const Partition& mu, const Partition& lambda, int m,
                                    int max_width) {
  Key key{mu, lambda, m, max_width};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Decomposition d = detail::expand_counts(mu, lambda, m, max_width);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(std::move(key), std::move(d)).first->second;
}

size_t ProductCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void ProductCache::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

void check_query(const PowerQuery& q) {
  if (q.m < 1) throw Error("m must be positive");
  if (q.n_parties < 1) throw Error("N must be positive");
  if (q.lambda.rows() > q.m) {
    throw TooManyRows("lambda has " + std::to_string(q.lambda.rows()) + " rows, SU(" +
                      std::to_string(q.m) + ") allows at most " + std::to_string(q.m));
  }
}

bool necessary_condition(const PowerQuery& q) {
  const long long boxes = static_cast<long long>(q.lambda.weight()) * q.n_parties;
  return boxes % q.m == 0;
}

namespace {

// N-1 left-associated multiplications by lambda; diagrams wider than
// max_width (when positive) are dropped.
Decomposition iterate_power(const PowerQuery& q, int max_width, const PowerOptions& opts) {
  ProductCache local;
  ProductCache& cache = opts.cache != nullptr ? *opts.cache : local;

  Decomposition current;
  current.add(q.lambda, 1);
  for (int step = 2; step <= q.n_parties; ++step) {
    std::vector<std::pair<Partition, BigInt>> items(current.entries().begin(),
                                                    current.entries().end());
    std::vector<Decomposition> products(items.size());
    std::exception_ptr failure;
    const long long n = static_cast<long long>(items.size());

    auto multiply = [&](long long i) {
      try {
        products[static_cast<size_t>(i)] =
            cache.product(items[static_cast<size_t>(i)].first, q.lambda, q.m, max_width);
      } catch (...) {
#pragma omp critical(lme_power_failure)
        if (!failure) failure = std::current_exception();
      }
    };
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long long i = 0; i < n; ++i) multiply(i);
    } else {
      for (long long i = 0; i < n; ++i) multiply(i);
    }
    if (failure) std::rethrow_exception(failure);

    Decomposition next;
    for (size_t i = 0; i < items.size(); ++i) {
      for (const auto& [nu, c] : products[i].entries()) next.add(nu, items[i].second * c);
    }
    if (next.size() > opts.max_diagrams) {
      throw ResourceBound("step " + std::to_string(step) + " holds " +
                          std::to_string(next.size()) + " diagrams, cap is " +
                          std::to_string(opts.max_diagrams));
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

Decomposition tensor_power_decompose(const PowerQuery& q, const PowerOptions& opts) {
  check_query(q);
  return iterate_power(q, 0, opts);
}

BigInt trivial_multiplicity(const PowerQuery& q, TrivialMethod method,
                            const PowerOptions& opts) {
  check_query(q);
  if (!necessary_condition(q)) return 0;
  if (q.lambda.empty()) return 1;
  const int width = q.lambda.weight() * q.n_parties / q.m;
  const Partition target = rectangle(width, q.m);
  if (method == TrivialMethod::iterated) {
    return iterate_power(q, width, opts).multiplicity(target);
  }
  const Staircase s = fulton_staircase(q.lambda, q.n_parties);
  return lr_skew_coefficient(s.gamma, s.alpha, target);
}

Staircase fulton_staircase(const Partition& lambda, int n) {
  if (lambda.empty()) throw Error("staircase needs a nonempty diagram");
  if (n < 1) throw Error("staircase needs at least one copy");
  std::vector<int> alpha;
  std::vector<int> gamma;
  // Copy j (from the top) is shifted right by (n-1-j) widths of lambda.
  for (int j = 0; j < n; ++j) {
    const int offset = (n - 1 - j) * lambda.row(1);
    for (int r = 1; r <= lambda.rows(); ++r) {
      alpha.push_back(offset);
      gamma.push_back(offset + lambda.row(r));
    }
  }
  return {Partition(alpha), Partition(gamma)};
}

BigInt catalan_multidim(int d, int k) {
  if (d < 1 || k < 1) throw Error("catalan_multidim needs positive d and k");
  Rational v = factorial(static_cast<unsigned>(k * d));
  for (int i = 0; i < k; ++i) {
    v *= Rational(factorial(static_cast<unsigned>(i)), factorial(static_cast<unsigned>(d + i)));
  }
  v.canonicalize();
  return v.get_num();
}

BigInt dyck_sequence_count(int d, int k, int max_length) {
  if (d < 1 || k < 1) throw Error("dyck_sequence_count needs positive d and k");
  if (d * k > max_length) {
    throw ResourceBound("sequence length " + std::to_string(d * k) + " exceeds enumeration cap " +
                        std::to_string(max_length));
  }
  std::vector<int> used(static_cast<size_t>(d) + 1, 0);
  unsigned long long count = 0;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int a = 1; a <= d; ++a) {
      const size_t ua = static_cast<size_t>(a);
      if (used[ua] == k) continue;
      if (a > 1 && used[ua] + 1 > used[ua - 1]) continue;
      ++used[ua];
      extend(remaining - 1);
      --used[ua];
    }
  };
  extend(d * k);
  return BigInt(std::to_string(count));
}

BigInt su2_singlet_multiplicity(int d, int n_parties) {
  if (d < 1 || n_parties < 1) throw Error("su2_singlet_multiplicity needs positive d and N");
  const int two_j = d - 1;
  // mult[s] = multiplicity of total twice-spin s.
  std::vector<BigInt> mult(static_cast<size_t>(two_j * n_parties) + 1, 0);
  mult[static_cast<size_t>(two_j)] = 1;
  for (int step = 2; step <= n_parties; ++step) {
    std::vector<BigInt> next(mult.size(), 0);
    for (size_t s = 0; s < mult.size(); ++s) {
      if (mult[s] == 0) continue;
      const int lo = std::abs(static_cast<int>(s) - two_j);
      const int hi = static_cast<int>(s) + two_j;
      for (int t = lo; t <= hi; t += 2) next[static_cast<size_t>(t)] += mult[s];
    }
    mult = std::move(next);
  }
  return mult[0];
}

}  // namespace lme
