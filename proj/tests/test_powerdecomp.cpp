#include <doctest.h>

#include "lme/errors.hpp"
#include "lme/powerdecomp.hpp"

using lme::Partition;
using lme::PowerQuery;
using lme::TrivialMethod;

namespace {

lme::BigInt trivial(const Partition& lambda, int m, int n, TrivialMethod method = TrivialMethod::iterated,
                    bool parallel = true) {
  lme::PowerOptions o;
  o.parallel = parallel;
  return lme::trivial_multiplicity({lambda, m, n}, method, o);
}

}  // namespace

TEST_SUITE("powerdecomp") {

TEST_CASE("tensor_power_decompose") {
  const auto a = lme::tensor_power_decompose({{1}, 2, 2});
  CHECK(a.size() == 2);
  CHECK(a.multiplicity({2}) == 1);
  CHECK(a.multiplicity({1, 1}) == 1);
  CHECK(lme::tensor_power_decompose({{1}, 2, 4}).multiplicity({2, 2}) == 2);
  CHECK(lme::tensor_power_decompose({{2}, 3, 3}).multiplicity({2, 2, 2}) == 1);
}

TEST_CASE("trivial_multiplicity") {
  CHECK(trivial({1}, 3, 6) == 5);
  CHECK(trivial({1}, 4, 6) == 0);
  const auto v = trivial({2, 1}, 3, 3);
  CHECK(v >= 1);
  CHECK(v == trivial({2, 1}, 3, 3, TrivialMethod::staircase));
  // Weyl character integral value for the adjoint cubed
  CHECK(v == 2);
}

TEST_CASE("necessary_condition") {
  CHECK(lme::necessary_condition({{1}, 3, 6}));
  CHECK_FALSE(lme::necessary_condition({{3}, 2, 3}));
  CHECK(lme::necessary_condition({{2, 1}, 3, 3}));
}

TEST_CASE("fulton_staircase") {
  const auto s1 = lme::fulton_staircase({1}, 3);
  CHECK(s1.gamma.weight() - s1.alpha.weight() == 3);
  CHECK(lme::lr_skew_coefficient(s1.gamma, s1.alpha, lme::rectangle(1, 3)) == 1);
  CHECK(trivial({1}, 3, 3, TrivialMethod::staircase) == 1);

  const auto s2 = lme::fulton_staircase({2}, 2);
  CHECK(s2.alpha == Partition{2});
  CHECK(s2.gamma == Partition{4, 2});

  // copies meet only at a corner, so the skew Schur function factorizes
  const auto s3 = lme::fulton_staircase({2, 1}, 2);
  CHECK(s3.alpha == Partition{2, 2});
  CHECK(s3.gamma == Partition{4, 3, 2, 1});
  CHECK(s3.gamma.weight() - s3.alpha.weight() == 6);
  for (const auto& nu : lme::partitions_of(6, 6)) {
    CHECK(lme::lr_skew_coefficient(s3.gamma, s3.alpha, nu) == lme::lr_coefficient({2, 1}, {2, 1}, nu));
  }
  // sharing a row instead loses the trivial component
  CHECK(lme::lr_skew_coefficient({4, 3, 1}, {2}, {2, 2, 2}) == 0);
}

TEST_CASE("catalan and dyck counts") {
  for (int d = 1; d <= 6; ++d) CHECK(lme::catalan_multidim(d, 1) == 1);
  CHECK(lme::catalan_multidim(2, 2) == 2);
  CHECK(lme::catalan_multidim(3, 2) == 5);
  CHECK(lme::catalan_multidim(2, 5) == 42);
  CHECK(lme::dyck_sequence_count(2, 2) == 2);
  CHECK(lme::dyck_sequence_count(3, 1) == 1);
  CHECK(lme::dyck_sequence_count(3, 2) == 5);
  CHECK_THROWS_AS(lme::dyck_sequence_count(5, 5), lme::ResourceBound);
}

TEST_CASE("su2_singlet_multiplicity") {
  CHECK(lme::su2_singlet_multiplicity(2, 4) == 2);
  CHECK(lme::su2_singlet_multiplicity(4, 3) == 0);
  CHECK(lme::su2_singlet_multiplicity(3, 4) == 3);
  for (int d = 2; d <= 5; ++d) {
    for (int n = 1; n <= 8; ++n) CHECK(lme::su2_singlet_multiplicity(d, n) == trivial({d - 1}, 2, n));
  }
}

TEST_CASE("route agreement on small cases") {
  for (int m = 2; m <= 4; ++m) {
    for (int w = 1; w <= 4; ++w) {
      for (const auto& lambda : lme::partitions_of(w, m - 1)) {
        for (int n = 1; n <= 4; ++n) {
          CHECK(trivial(lambda, m, n) == trivial(lambda, m, n, TrivialMethod::staircase));
        }
      }
    }
  }
}

TEST_CASE("divisibility failure forces zero multiplicity") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lambda : lme::partitions_in_box(n - 1, 4)) {
      if (lambda.empty()) continue;
      for (int m = 2; m <= 4; ++m) {
        if (lambda.rows() >= m) continue;
        if (!lme::necessary_condition({lambda, m, n})) CHECK(trivial(lambda, m, n) == 0);
      }
    }
  }
}

TEST_CASE("dimension balance of natural powers") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const auto dec = lme::tensor_power_decompose({{1}, m, n});
      lme::BigInt total = 0;
      for (const auto& [nu, c] : dec.entries()) total += c * lme::irrep_dim(nu, m);
      lme::BigInt expected = 1;
      for (int j = 0; j < n; ++j) expected *= m;
      CHECK(total == expected);
    }
  }
}

TEST_CASE("serial and parallel agree") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 2; n <= 6; ++n) {
      const PowerQuery q{{2, 1}, m, n};
      if (m < 3) continue;
      lme::PowerOptions s, p;
      s.parallel = false;
      CHECK(lme::tensor_power_decompose(q, s) == lme::tensor_power_decompose(q, p));
    }
  }
}

TEST_CASE("bad queries") {
  CHECK_THROWS_AS(lme::check_query({{1}, 0, 2}), lme::Error);
  CHECK_THROWS_AS(lme::check_query({{1}, 2, 0}), lme::Error);
  lme::PowerOptions tiny;
  tiny.max_diagrams = 3;
  CHECK_THROWS_AS(lme::tensor_power_decompose({{1}, 4, 8}, tiny), lme::ResourceBound);
  CHECK(lme::parse_trivial_method("staircase") == TrivialMethod::staircase);
  CHECK_THROWS_AS(lme::parse_trivial_method("other"), lme::Error);
}

}
