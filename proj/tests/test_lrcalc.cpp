#include <doctest.h>

#include "lme/lrcalc.hpp"

using lme::Decomposition;
using lme::LabeledDiagram;
using lme::Partition;

namespace {

Decomposition decomp(std::initializer_list<std::pair<Partition, long>> items) {
  Decomposition d;
  for (const auto& [p, c] : items) d.add(p, lme::BigInt(c));
  return d;
}

}  // namespace

TEST_SUITE("lrcalc") {

TEST_CASE("lr_expand small products") {
  CHECK(lme::lr_expand({1}, {1}, 2) == decomp({{{2}, 1}, {{1, 1}, 1}}));
  const auto e = lme::lr_expand({2, 1}, {2, 1}, 3);
  CHECK(e.multiplicity({3, 2, 1}) >= 1);
  CHECK(e == decomp({{{4, 2}, 1}, {{4, 1, 1}, 1}, {{3, 3}, 1}, {{3, 2, 1}, 2}, {{2, 2, 2}, 1}}));
  CHECK(e.multiplicity({2, 2, 2}) == 1);
  // 8 x 8 = 27 + 10 + 10 + 8 + 8 + 1
  lme::BigInt total = 0;
  for (const auto& [nu, c] : e.entries()) total += c * lme::irrep_dim(nu, 3);
  CHECK(total == 64);
  for (const auto& [nu, c] : e.entries()) {
    CHECK(c == lme::lr_oracle_coefficient({2, 1}, {2, 1}, nu));
  }
}

TEST_CASE("lr_coefficient") {
  CHECK(lme::lr_coefficient({1}, {1}, {2}) == 1);
  CHECK(lme::lr_coefficient({2, 1}, {2, 1}, {2, 2, 2}) == 1);
  CHECK(lme::lr_coefficient({2}, {2}, {5}) == 0);
  CHECK(lme::lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
}

TEST_CASE("enumerate_lr_fillings") {
  CHECK(lme::enumerate_lr_fillings({1}, {1}, 2).size() == 2);
  const auto f = lme::enumerate_lr_fillings({2}, {2}, 3);
  REQUIRE(f.size() == 3);
  CHECK(f[0].final_shape() == Partition{4});
  CHECK(f[1].final_shape() == Partition{3, 1});
  CHECK(f[2].final_shape() == Partition{2, 2});
  for (const auto& x : f) {
    for (const auto& row : x.rows()) {
      for (int l : row.labels) CHECK(l == 1);
    }
  }
  // one row still fits (3) under SU(1)
  const auto one = lme::enumerate_lr_fillings({1}, {2}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].final_shape() == Partition{3});
  CHECK(lme::enumerate_lr_fillings({1}, {1}, 1).size() == 1);
}

TEST_CASE("validate_filling conditions") {
  // single row squared: a second row of 1-labels
  const LabeledDiagram ok(Partition{3}, {{}, {1, 1, 1}});
  CHECK(lme::validate_filling(ok, 2).valid());

  const LabeledDiagram stacked(Partition{}, {{1}, {1}});
  const auto r2 = lme::validate_filling(stacked, 3);
  CHECK_FALSE(r2.distinct_columns);
  CHECK(r2.first_failure() == 2);

  // a 2 above every 1
  const LabeledDiagram early(Partition{1}, {{2}, {1}});
  const auto r3 = lme::validate_filling(early, 3);
  CHECK_FALSE(r3.row_counting);
  CHECK(r3.first_failure() == 3);
  CHECK(lme::lr_oracle_coefficient({1}, {1, 1}, {2, 1}) == 1);
  // the oracle accepts (2,1) only through the other filling
  const auto all = lme::enumerate_lr_fillings({1}, {1, 1}, 3);
  for (const auto& f : all) CHECK_FALSE(f == early);

  const LabeledDiagram tall(Partition{1}, {{}, {1}, {2}});
  CHECK_FALSE(lme::validate_filling(tall, 2).row_bound);
  CHECK(lme::validate_filling(tall, lme::kGeneralLinear).valid());

  const LabeledDiagram gap(Partition{1}, {{}, {}, {1}});
  CHECK_FALSE(lme::validate_filling(gap, 3).young_shape);
}

TEST_CASE("lr_skew_coefficient") {
  CHECK(lme::lr_skew_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lme::lr_skew_coefficient({3, 2}, {}, {3, 2}) == 1);
  CHECK(lme::lr_skew_coefficient({2}, {2}, {}) == 1);
  CHECK(lme::lr_skew_coefficient({2, 1}, {1}, {2}) == 1);
  CHECK(lme::lr_skew_coefficient({2, 2}, {1}, {2}) == 0);
}

TEST_CASE("lr_oracle_coefficient") {
  CHECK(lme::lr_oracle_coefficient({1}, {1}, {2}) == 1);
  CHECK(lme::lr_oracle_coefficient({2, 1}, {2, 1}, {2, 2, 2}) == 1);
  CHECK(lme::lr_oracle_coefficient({3, 2}, {2, 1}, {4, 3, 1}) ==
        lme::lr_coefficient({3, 2}, {2, 1}, {4, 3, 1}));
  CHECK(lme::lr_oracle_coefficient({3, 2}, {2, 1}, {4, 3, 1}) == 2);
}

TEST_CASE("weight, dimension and containment over small products") {
  for (int m = 1; m <= 5; ++m) {
    const auto box = lme::partitions_in_box(m, 4);
    for (const auto& a : box) {
      for (const auto& b : box) {
        if (a.weight() + b.weight() > 8) continue;
        const auto e = lme::lr_expand(a, b, m);
        lme::BigInt total = 0;
        for (const auto& [nu, c] : e.entries()) {
          CHECK(nu.weight() == a.weight() + b.weight());
          CHECK(lme::contains(nu, a));
          CHECK(nu.rows() <= m);
          total += c * lme::irrep_dim(lme::reduce_mod(nu, m), m);
        }
        CHECK(total == lme::irrep_dim(a, m) * lme::irrep_dim(b, m));
      }
    }
  }
}

TEST_CASE("coefficient symmetry and skew agreement") {
  for (int wa = 0; wa <= 4; ++wa) {
    for (int wb = 0; wb <= 4; ++wb) {
      for (const auto& a : lme::partitions_of(wa, wa)) {
        for (const auto& b : lme::partitions_of(wb, wb)) {
          for (const auto& nu : lme::partitions_of(wa + wb, wa + wb)) {
            const auto c = lme::lr_coefficient(a, b, nu);
            CHECK(c == lme::lr_coefficient(b, a, nu));
            if (lme::contains(nu, a)) CHECK(c == lme::lr_skew_coefficient(nu, a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("general linear mode has no row bound") {
  const auto e = lme::lr_expand({1, 1}, {1, 1}, lme::kGeneralLinear);
  CHECK(e.multiplicity({1, 1, 1, 1}) == 1);
  CHECK(lme::lr_expand({1, 1}, {1, 1}, 3).multiplicity({1, 1, 1, 1}) == 0);
}

}
