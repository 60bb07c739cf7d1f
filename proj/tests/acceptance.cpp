// Acceptance run: one PASS/FAIL line per criterion.

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lme/errors.hpp"
#include "lme/generators.hpp"
#include "lme/kernel.hpp"
#include "lme/lrcalc.hpp"
#include "lme/powerdecomp.hpp"
#include "lme/states.hpp"
#include "lme/tables.hpp"
#include "lme/telescope.hpp"

namespace {

using lme::BigInt;
using lme::Group;
using lme::Partition;
using lme::StateVector;

// Reference SU(d) grid, d = 2..6, N = 1..12.
constexpr std::array<std::array<int, 12>, 5> kSuGrid{{
    {1, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132},
    {1, 0, 1, 0, 0, 5, 0, 0, 42, 0, 0, 462},
    {1, 0, 0, 1, 0, 0, 0, 14, 0, 0, 0, 462},
    {1, 0, 0, 0, 1, 0, 0, 0, 0, 42, 0, 0},
    {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 132},
}};

// Reference SO(d) grid, d = 3..7, N = 1..10; negative marks bold cells.
constexpr std::array<std::array<int, 10>, 5> kSoGrid{{
    {1, 1, 1, 3, 6, 15, 36, 91, -232, -603},
    {1, 1, 0, 4, 0, 25, 0, -196, 0, -1764},
    {1, 1, 0, 3, 1, 15, -15, -105, -190, -945},
    {1, 1, 0, 3, 0, -16, 0, -126, 0, -1296},
    {1, 1, 0, 3, 0, -15, -1, -105, -28, -945},
}};

// Italic zeros are also outside the regular font.
bool table2_regular(int d, int n) {
  if (d == 4 && n == 9) return false;
  if (d == 6 && (n == 7 || n == 9)) return false;
  return kSoGrid[static_cast<std::size_t>(d - 3)][static_cast<std::size_t>(n - 1)] >= 0;
}

int table2_value(int d, int n) {
  const int v = kSoGrid[static_cast<std::size_t>(d - 3)][static_cast<std::size_t>(n - 1)];
  return v < 0 ? -v : v;
}

// Closed forms at N = 6. Lab is lambda_a - lambda_b, La is lambda_a, "-" is blank.
struct ClosedFormTable {
  int m;  // 0 for Delta
  int k0;
  std::vector<std::vector<const char*>> rows;
};

const std::vector<ClosedFormTable>& n6_tables() {
  static const std::vector<ClosedFormTable> t{
      {0, 2, {
          {"L12", "L23", "L34", "L45", "L5"},
          {"L23", "L12+L34", "L23+L45", "L34+L5", "L45"},
          {"L34", "L23+L45", "L12+L34+L5", "L23+L45", "L34"},
          {"L45", "L34+L5", "L23+L45", "L12+L34", "L23"},
          {"L5", "L45", "L34", "L23", "L12"},
      }},
      {1, 1, {
          {"-", "L12", "L23", "L34", "L45", "L5"},
          {"-", "-", "L12", "L23", "L34", "L45"},
          {"-", "-", "-", "L12", "L23", "L34"},
          {"-", "-", "-", "-", "L12", "L23"},
          {"-", "-", "-", "-", "-", "L12"},
      }},
      {2, 1, {
          {"-L12", "L12-L23", "L23-L34", "L34-L45", "L45-L5", "L5"},
          {"-", "L23-L12", "L12+L34-L23", "L23+L45-L34", "L34+L5-L45", "L45"},
          {"-", "-", "L23-L12", "L12+L34-L23", "L23+L45-L34", "L34"},
          {"-", "-", "-", "L23-L12", "L12+L34-L23", "L23"},
          {"-", "-", "-", "-", "L23-L12", "L12"},
      }},
      {3, 1, {
          {"-L12", "L12-L23", "L23-L34", "L34-L45", "L45-L5", "L5"},
          {"-L23", "L23-(L12+L34)", "L12+L34-(L23+L45)", "L23+L45-(L34+L5)", "L34+L5-L45", "L45"},
          {"-", "L34-L23", "L23+L45-(L12+L34)", "L12+L34+L5-(L23+L45)", "L23+L45-L34", "L34"},
          {"-", "-", "L34-L23", "L23+L45-(L12+L34)", "L12+L34-L23", "L23"},
          {"-", "-", "-", "L34-L23", "L23-L12", "L12"},
      }},
      {4, 1, {
          {"-L12", "L12-L23", "L23-L34", "L34-L45", "L45-L5", "L5"},
          {"-L23", "L23-(L12+L34)", "L12+L34-(L23+L45)", "L23+L45-(L34+L5)", "L34+L5-L45", "L45"},
          {"-L34", "L34-(L23+L45)", "L23+L45-(L12+L34+L5)", "L12+L34+L5-(L23+L45)", "L23+L45-L34", "L34"},
          {"-", "L45-L34", "L34+L5-(L23+L45)", "L23+L45-(L12+L34)", "L12+L34-L23", "L23"},
          {"-", "-", "L45-L34", "L34-L23", "L23-L12", "L12"},
      }},
      {5, 1, {
          {"-L12", "L12-L23", "L23-L34", "L34-L45", "L45-L5", "L5"},
          {"-L23", "L23-(L12+L34)", "L12+L34-(L23+L45)", "L23+L45-(L34+L5)", "L34+L5-L45", "L45"},
          {"-L34", "L34-(L23+L45)", "L23+L45-(L12+L34+L5)", "L12+L34+L5-(L23+L45)", "L23+L45-L34", "L34"},
          {"-L45", "L45-(L34+L5)", "L34+L5-(L23+L45)", "L23+L45-(L12+L34)", "L12+L34-L23", "L23"},
          {"-", "L5-L45", "L45-L34", "L34-L23", "L23-L12", "L12"},
      }},
  };
  return t;
}

class ExprParser {
 public:
  ExprParser(const std::string& text, const Partition& lambda) : s_(text), lambda_(lambda) {}

  int parse() {
    const int v = expr();
    if (pos_ != s_.size()) throw std::runtime_error("trailing input in " + s_);
    return v;
  }

 private:
  int expr() {
    int v = term();
    while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      const char op = s_[pos_++];
      const int t = term();
      v = op == '+' ? v + t : v - t;
    }
    return v;
  }

  int term() {
    if (s_[pos_] == '-') {
      ++pos_;
      return -atom();
    }
    return atom();
  }

  int atom() {
    if (s_[pos_] == '(') {
      ++pos_;
      const int v = expr();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw std::runtime_error("unbalanced " + s_);
      ++pos_;
      return v;
    }
    if (s_[pos_] != 'L') throw std::runtime_error("bad term in " + s_);
    ++pos_;
    std::vector<int> idx;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) idx.push_back(s_[pos_++] - '0');
    if (idx.size() == 1) return lambda_.row(idx[0]);
    if (idx.size() == 2) return lambda_.row(idx[0]) - lambda_.row(idx[1]);
    throw std::runtime_error("bad index in " + s_);
  }

  std::string s_;
  std::size_t pos_ = 0;
  const Partition& lambda_;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Partition random_partition(std::mt19937& rng, int rows, int max_part) {
  std::uniform_int_distribution<int> dist(0, max_part);
  std::vector<int> parts(static_cast<std::size_t>(rows));
  for (auto& p : parts) p = dist(rng);
  std::sort(parts.rbegin(), parts.rend());
  return lme::make_partition(parts);
}

std::string join(const std::vector<std::string>& items, std::size_t limit = 6) {
  std::ostringstream out;
  for (std::size_t j = 0; j < items.size() && j < limit; ++j) out << (j ? "; " : "") << items[j];
  if (items.size() > limit) out << "; ...";
  return out.str();
}

// Kernel results shared by criteria 3, 7, 8 and 9.
struct KernelRecord {
  std::size_t dim = 0;
  bool all_lme = true;
};

std::map<std::string, KernelRecord>& kernel_log() {
  static std::map<std::string, KernelRecord> log;
  return log;
}

KernelRecord record_kernel(const std::string& key, const std::vector<StateVector>& basis) {
  KernelRecord r{basis.size(), true};
  for (const auto& v : basis) r.all_lme = r.all_lme && lme::is_lme(v);
  kernel_log()[key] = r;
  return r;
}

std::vector<std::pair<int, int>> table2_kernel_cells() {
  std::vector<std::pair<int, int>> cells;
  for (int d = 3; d <= 7; ++d) {
    for (int n = 1; n <= 10; ++n) {
      if (!table2_regular(d, n)) continue;
      if (lme::checked_power(static_cast<std::uint64_t>(d), n, UINT64_MAX) > lme::kDefaultDimCap) continue;
      cells.emplace_back(d, n);
    }
  }
  return cells;
}

Outcome criterion1() {
  const auto t = lme::table_su(2, 6, 1, 12);
  std::vector<std::string> bad;
  int match = 0;
  for (int d = 2; d <= 6; ++d) {
    for (int n = 1; n <= 12; ++n) {
      const auto& c = t.at(d, n);
      const int expected = kSuGrid[static_cast<std::size_t>(d - 2)][static_cast<std::size_t>(n - 1)];
      if (c.value && *c.value == expected) {
        ++match;
      } else {
        bad.push_back("d=" + std::to_string(d) + " N=" + std::to_string(n) + " got " +
                      (c.value ? c.value->get_str() : "none") + " expected " + std::to_string(expected));
      }
    }
  }
  std::string detail = std::to_string(match) + "/60 cells match";
  if (!bad.empty()) detail += "; mismatches: " + join(bad, 10);
  return {bad.empty(), detail};
}

Outcome criterion2() {
  std::vector<std::string> bad;
  int checked = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int k = 1; k <= 3; ++k) {
      const BigInt a = lme::trivial_multiplicity({{1}, d, k * d}, lme::TrivialMethod::iterated);
      const BigInt b = lme::catalan_multidim(d, k);
      const BigInt c = lme::dyck_sequence_count(d, k);
      ++checked;
      if (a != b || b != c) {
        bad.push_back("d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " + a.get_str() + "/" +
                      b.get_str() + "/" + c.get_str());
      }
    }
  }
  return {bad.empty(), std::to_string(checked) + " (d,k) triples" + (bad.empty() ? "" : "; " + join(bad))};
}

Outcome criterion3() {
  std::vector<std::string> bad;
  int match = 0;
  const auto cells = table2_kernel_cells();
  std::map<int, int> n_max;
  for (const auto& [d, n] : cells) n_max[d] = std::max(n_max[d], n);
  lme::SoTableOptions opts;
  opts.check_lme = true;
  for (const auto& [d, top] : n_max) {
    const auto t = lme::table_so(d, d, 1, top, opts);
    for (int n = 1; n <= top; ++n) {
      if (!table2_regular(d, n)) continue;
      const auto& c = t.at(d, n);
      if (c.method != "kernel") {
        bad.push_back("d=" + std::to_string(d) + " N=" + std::to_string(n) + " not solved (" + c.method + ")");
        continue;
      }
      kernel_log()["so d=" + std::to_string(d) + " N=" + std::to_string(n)] = {c.value->get_ui(), c.lme.value_or(false)};
      if (*c.value == table2_value(d, n)) {
        ++match;
      } else {
        bad.push_back("d=" + std::to_string(d) + " N=" + std::to_string(n) + " got " + c.value->get_str() +
                      " expected " + std::to_string(table2_value(d, n)));
      }
    }
  }
  for (const auto& [n, expected] : {std::pair{9, 232}, std::pair{10, 603}}) {
    const BigInt v = lme::su2_singlet_multiplicity(3, n);
    if (v == expected) {
      ++match;
    } else {
      bad.push_back("d=3 N=" + std::to_string(n) + " spin-1 got " + v.get_str());
    }
  }
  const std::size_t total = cells.size() + 2;
  std::string detail = std::to_string(match) + "/" + std::to_string(total) + " cells match";
  if (!bad.empty()) detail += "; mismatches: " + join(bad, 10);
  return {bad.empty(), detail};
}

std::vector<lme::SweepCase> criterion4_sweep(bool iterated) {
  lme::SweepOptions o;
  o.iterated = iterated;
  auto cases = lme::theorem_sweep(2, 5, 4, o);
  auto more = lme::theorem_sweep(6, 7, 2, o);
  cases.insert(cases.end(), more.begin(), more.end());
  return cases;
}

Outcome criterion4() {
  const auto cases = criterion4_sweep(false);
  std::vector<std::string> bad;
  for (const auto& c : cases) {
    if (!c.ok()) bad.push_back(c.lambda.key() + " N=" + std::to_string(c.n) + ": " + c.failure);
  }
  return {bad.empty(), std::to_string(cases.size()) + " cases, " + std::to_string(bad.size()) + " failures" +
                           (bad.empty() ? "" : "; " + join(bad))};
}

Outcome criterion5() {
  std::vector<Partition> shapes;
  for (int w = 0; w <= 6; ++w) {
    for (const auto& p : lme::partitions_of(w, w)) shapes.push_back(p);
  }
  std::map<int, std::vector<Partition>> by_weight;
  for (int w = 0; w <= 12; ++w) by_weight[w] = lme::partitions_of(w, w);
  long triples = 0;
  std::vector<std::string> bad;
  for (const auto& a : shapes) {
    for (const auto& b : shapes) {
      for (const auto& nu : by_weight[a.weight() + b.weight()]) {
        if (!lme::contains(nu, a) || !lme::contains(nu, b)) continue;
        const BigInt oracle = lme::lr_oracle_coefficient(a, b, nu);
        ++triples;
        if (lme::lr_coefficient(a, b, nu) != oracle) {
          bad.push_back(a.key() + "*" + b.key() + "->" + nu.key());
        }
      }
      for (int m = 1; m <= 4; ++m) {
        if (a.rows() > m || b.rows() > m) continue;
        const auto e = lme::lr_expand(a, b, m);
        for (const auto& nu : by_weight[a.weight() + b.weight()]) {
          if (nu.rows() > m) continue;
          ++triples;
          if (e.multiplicity(nu) != lme::lr_oracle_coefficient(a, b, nu)) {
            bad.push_back(a.key() + "*" + b.key() + "->" + nu.key() + " m=" + std::to_string(m));
          }
        }
      }
    }
  }
  return {bad.empty(), std::to_string(triples) + " comparisons, " + std::to_string(bad.size()) + " mismatches" +
                           (bad.empty() ? "" : "; " + join(bad))};
}

// Row differences and block offsets read off the executed trace.
struct Measured {
  std::vector<std::vector<int>> delta;                      // [k][i]
  std::vector<std::vector<std::vector<int>>> small_delta;  // [k][i][m]
};

Measured measure(const Partition& lambda, int n) {
  const auto result = lme::execute_plan(lme::build_expansion_plan(lambda, n));
  const auto sz = static_cast<std::size_t>(n + 1);
  Measured out{std::vector<std::vector<int>>(sz, std::vector<int>(sz, 0)),
               std::vector<std::vector<std::vector<int>>>(sz, std::vector<std::vector<int>>(sz, std::vector<int>(sz, 0)))};
  for (int k = 1; k <= n; ++k) {
    const auto& f = result.trace[static_cast<std::size_t>(k - 1)];
    const auto& base = f.base();
    auto up_to = [&](int row, int m) {
      if (row < 1 || row > static_cast<int>(f.rows().size())) return 0;
      int count = 0;
      for (int l : f.rows()[static_cast<std::size_t>(row - 1)].labels) count += l <= m ? 1 : 0;
      return count;
    };
    for (int i = 1; i <= n - 1; ++i) {
      out.delta[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = base.row(i) - base.row(i + 1);
      for (int m = 1; m <= n - 1; ++m) {
        out.small_delta[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] =
            up_to(i + 1, m) - up_to(i, m - 1);
      }
    }
  }
  return out;
}

Outcome criterion6() {
  std::mt19937 rng(20240611);
  std::vector<std::string> bad;
  long compared = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int t = 0; t < 200; ++t) {
      const auto lambda = random_partition(rng, n - 1, 9);
      const auto sim = measure(lambda, n);
      for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n - 1; ++i) {
          ++compared;
          if (lme::delta(i, k, lambda, n) != sim.delta[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]) {
            bad.push_back("Delta " + lambda.key() + " N=" + std::to_string(n));
          }
          for (int m = 1; m <= n - 1; ++m) {
            ++compared;
            const int s = sim.small_delta[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
            if (lme::small_delta(i, k, m, lambda, n) != s) {
              bad.push_back("delta(" + std::to_string(m) + ") " + lambda.key() + " N=" + std::to_string(n));
            }
          }
        }
      }
    }
  }
  long entries = 0;
  for (int t = 0; t < 100; ++t) {
    const auto lambda = random_partition(rng, 5, 9);
    const auto sim = measure(lambda, 6);
    for (const auto& table : n6_tables()) {
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const int i = static_cast<int>(r) + 1;
        for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
          const std::string e = table.rows[r][c];
          if (e == "-") continue;
          const int k = table.k0 + static_cast<int>(c);
          const int expected = ExprParser(e, lambda).parse();
          const auto ki = static_cast<std::size_t>(k);
          const auto ii = static_cast<std::size_t>(i);
          const int formula = table.m == 0 ? lme::delta(i, k, lambda, 6) : lme::small_delta(i, k, table.m, lambda, 6);
          const int measured = table.m == 0 ? sim.delta[ki][ii] : sim.small_delta[ki][ii][static_cast<std::size_t>(table.m)];
          ++entries;
          if (expected != formula || expected != measured) {
            bad.push_back((table.m == 0 ? std::string("Delta") : "delta(" + std::to_string(table.m) + ")") +
                          " i=" + std::to_string(i) + " k=" + std::to_string(k) + " " + lambda.key());
          }
        }
      }
    }
  }
  return {bad.empty(), std::to_string(compared) + " formula/trace comparisons, " + std::to_string(entries) +
                           " N=6 table evaluations, " + std::to_string(bad.size()) + " mismatches" +
                           (bad.empty() ? "" : "; " + join(bad))};
}

Outcome criterion7() {
  const auto gens = lme::make_generators(Group::boson, 3, 2);
  const auto basis = lme::trivial_subspace(gens, 3);
  record_kernel("boson m=3 n=2 N=3", basis);
  const auto psi = lme::trap_boson_state();
  std::vector<StateVector> with(basis.begin(), basis.end());
  with.push_back(psi);
  const bool dim1 = basis.size() == 1;
  const bool inside = lme::annihilated_by(lme::bosonic_all_ops(3, 2), psi) && lme::span_rank(with) == basis.size();
  const bool norm = psi.norm2() == 18;
  bool mixed = lme::is_lme(psi);
  for (int k = 0; k < 3; ++k) {
    mixed = mixed && lme::reduced_density(psi, k).diagonal() == std::vector<lme::Rational>(6, lme::Rational(1, 6)) &&
            lme::reduced_density(psi, k).is_maximally_mixed();
  }
  std::ostringstream detail;
  detail << "kernel dim " << basis.size() << ", state in kernel " << (inside ? "yes" : "no") << ", norm^2 "
         << psi.norm2().get_str() << ", rho_i = I/6 " << (mixed ? "yes" : "no");
  return {dim1 && inside && norm && mixed, detail.str()};
}

Outcome criterion8() {
  std::vector<std::string> bad;
  std::ostringstream dims;
  for (int d = 3; d <= 7; ++d) {
    const auto gens = lme::make_generators(Group::so, d);
    const auto basis = lme::trivial_subspace(gens, 4);
    record_kernel("so d=" + std::to_string(d) + " N=4", basis);
    const std::size_t expected = d == 4 ? 4 : 3;
    dims << (d > 3 ? " " : "") << "d" << d << ":" << basis.size();
    if (basis.size() != expected || static_cast<int>(basis.size()) != table2_value(d, 4)) {
      bad.push_back("d=" + std::to_string(d) + " kernel " + std::to_string(basis.size()));
    }
    if (d == 4) continue;
    const auto psi = lme::so_n4_states(d);
    for (std::size_t j = 0; j < psi.size(); ++j) {
      if (!lme::annihilated_by(gens.ops, psi[j])) {
        bad.push_back("Psi" + std::to_string(j + 1) + " d=" + std::to_string(d));
      }
    }
    std::vector<StateVector> all(psi.begin(), psi.end());
    const std::size_t own = lme::span_rank(all);
    all.insert(all.end(), basis.begin(), basis.end());
    dims << "(span " << own << (lme::span_rank(all) == basis.size() ? ", inside" : ", outside") << ")";
  }
  return {bad.empty(), "kernel dims " + dims.str() + (bad.empty() ? "" : "; " + join(bad))};
}

Outcome criterion9() {
  if (kernel_log().empty()) {
    for (const auto& [d, n] : table2_kernel_cells()) {
      record_kernel("so d=" + std::to_string(d) + " N=" + std::to_string(n),
                    lme::trivial_subspace(lme::make_generators(Group::so, d), n));
    }
    record_kernel("boson m=3 n=2 N=3", lme::trivial_subspace(lme::make_generators(Group::boson, 3, 2), 3));
    for (int d = 3; d <= 7; ++d) {
      record_kernel("so d=" + std::to_string(d) + " N=4", lme::trivial_subspace(lme::make_generators(Group::so, d), 4));
    }
  }
  std::size_t vectors = 0;
  std::vector<std::string> bad;
  for (const auto& [key, r] : kernel_log()) {
    vectors += r.dim;
    if (!r.all_lme) bad.push_back(key);
  }
  return {bad.empty(), std::to_string(vectors) + " basis vectors over " + std::to_string(kernel_log().size()) +
                           " kernels" + (bad.empty() ? ", all LME" : "; not LME: " + join(bad))};
}

Outcome criterion10() {
  const auto cases = criterion4_sweep(true);
  std::vector<std::string> bad;
  for (const auto& c : cases) {
    if (!c.staircase || !c.iterated || *c.staircase != *c.iterated) {
      bad.push_back(c.lambda.key() + " N=" + std::to_string(c.n));
    }
  }
  int kernels = 0;
  for (int d = 2; d <= 4; ++d) {
    const auto gens = lme::make_generators(Group::su, d);
    for (int n = 1; n <= 6; ++n) {
      const BigInt s = lme::trivial_multiplicity({{1}, d, n}, lme::TrivialMethod::staircase);
      const auto k = lme::trivial_subspace(gens, n).size();
      ++kernels;
      if (s != static_cast<unsigned long>(k)) {
        bad.push_back("kernel d=" + std::to_string(d) + " N=" + std::to_string(n) + ": " + s.get_str() + " vs " +
                      std::to_string(k));
      }
    }
  }
  return {bad.empty(), std::to_string(cases.size()) + " sweep cases and " + std::to_string(kernels) +
                           " kernels compared, " + std::to_string(bad.size()) + " disagreements" +
                           (bad.empty() ? "" : "; " + join(bad))};
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "SU(d) multiplicity table", 60, criterion1},
      {2, "Catalan triple agreement", 30, criterion2},
      {3, "SO(d) multiplicity table", 900, criterion3},
      {4, "constructive sweep", 600, criterion4},
      {5, "LR oracle equivalence", 300, criterion5},
      {6, "Delta and delta(m) closed forms", 120, criterion6},
      {7, "three-trap boson state", 10, criterion7},
      {8, "SO(d) N=4 states", 120, criterion8},
      {9, "kernel bases are LME", 900, criterion9},
      {10, "route agreement", 300, criterion10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = seconds_since(t0);
    if (s > c.limit_s) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %2d %s: %s (%s) [%.2f s of %.0f s]\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), s, c.limit_s);
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
