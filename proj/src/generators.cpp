#include "lme/generators.hpp"

#include <algorithm>
#include <map>

#include "lme/errors.hpp"

namespace lme {

namespace {

using Entries = std::vector<std::tuple<int, int, GaussianRational>>;

SparseOperator from_entries(int d, const Entries& entries) {
  SparseOperator op(static_cast<std::size_t>(d));
  for (const auto& [r, c, v] : entries) op.add(static_cast<std::size_t>(r), static_cast<std::size_t>(c), v);
  return op;
}

SparseOperator unit(int d, int r, int c) { return from_entries(d, {{r, c, 1}}); }

}  // namespace

std::vector<SparseOperator> su_simple_root_ops(int d) {
  if (d < 2) throw UnsupportedDim("su(d) needs d >= 2");
  std::vector<SparseOperator> out;
  for (int i = 0; i + 1 < d; ++i) {
    out.push_back(unit(d, i, i + 1));
    out.push_back(unit(d, i + 1, i));
  }
  return out;
}

std::vector<SparseOperator> su_all_root_ops(int d) {
  if (d < 2) throw UnsupportedDim("su(d) needs d >= 2");
  std::vector<SparseOperator> out;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i != j) out.push_back(unit(d, i, j));
    }
  }
  return out;
}

std::vector<SparseOperator> so_simple_root_ops(int d) {
  if (d < 3) throw UnsupportedDim("so(d) needs d >= 3");
  const GaussianRational I = GaussianRational::i();
  std::vector<SparseOperator> out;
  for (int j = 0; j <= d / 2 - 2; ++j) {
    const int a = 2 * j;
    out.push_back(from_entries(d, {{a, a + 2, 1},
                                   {a, a + 3, I},
                                   {a + 1, a + 2, -I},
                                   {a + 1, a + 3, 1},
                                   {a + 2, a, -1},
                                   {a + 2, a + 1, I},
                                   {a + 3, a, -I},
                                   {a + 3, a + 1, -1}}));
    out.push_back(from_entries(d, {{a, a + 2, 1},
                                   {a, a + 3, -I},
                                   {a + 1, a + 2, I},
                                   {a + 1, a + 3, 1},
                                   {a + 2, a, -1},
                                   {a + 2, a + 1, -I},
                                   {a + 3, a, I},
                                   {a + 3, a + 1, -1}}));
  }
  if (d % 2 == 0) {
    out.push_back(from_entries(d, {{d - 4, d - 2, 1},
                                   {d - 4, d - 1, -I},
                                   {d - 3, d - 2, -I},
                                   {d - 3, d - 1, -1},
                                   {d - 2, d - 4, -1},
                                   {d - 2, d - 3, I},
                                   {d - 1, d - 4, I},
                                   {d - 1, d - 3, 1}}));
    out.push_back(from_entries(d, {{d - 4, d - 2, 1},
                                   {d - 4, d - 1, I},
                                   {d - 3, d - 2, I},
                                   {d - 3, d - 1, -1},
                                   {d - 2, d - 4, -1},
                                   {d - 2, d - 3, -I},
                                   {d - 1, d - 4, -I},
                                   {d - 1, d - 3, 1}}));
  } else {
    out.push_back(from_entries(d, {{d - 3, d - 1, 1},
                                   {d - 2, d - 1, -I},
                                   {d - 1, d - 3, -1},
                                   {d - 1, d - 2, I}}));
    out.push_back(from_entries(d, {{d - 3, d - 1, 1},
                                   {d - 2, d - 1, I},
                                   {d - 1, d - 3, -1},
                                   {d - 1, d - 2, -I}}));
  }
  return out;
}

std::vector<SparseOperator> so_all_ops(int d) {
  if (d < 3) throw UnsupportedDim("so(d) needs d >= 3");
  std::vector<SparseOperator> out;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) out.push_back(from_entries(d, {{a, b, 1}, {b, a, -1}}));
  }
  return out;
}

std::vector<std::vector<int>> bosonic_basis(int m, int n) {
  if (m < 1 || n < 0) throw Error("bosonic basis needs m >= 1 and n >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> occ(static_cast<std::size_t>(m), 0);
  auto fill = [&](auto&& self, int mode, int left) -> void {
    if (mode == m - 1) {
      occ[static_cast<std::size_t>(mode)] = left;
      out.push_back(occ);
      return;
    }
    for (int k = left; k >= 0; --k) {
      occ[static_cast<std::size_t>(mode)] = k;
      self(self, mode + 1, left - k);
    }
  };
  fill(fill, 0, n);
  return out;
}

std::vector<Rational> bosonic_site_norms2(int m, int n) {
  std::vector<Rational> out;
  for (const auto& occ : bosonic_basis(m, n)) {
    BigInt w = 1;
    for (int k : occ) w *= factorial(static_cast<unsigned>(k));
    out.emplace_back(w);
  }
  return out;
}

namespace {

// a_alpha^dag a_beta m_n = n_beta m_{n - e_beta + e_alpha}.
SparseOperator hop(const std::vector<std::vector<int>>& basis,
                   const std::map<std::vector<int>, int>& index, int alpha, int beta) {
  SparseOperator op(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const int nb = basis[c][static_cast<std::size_t>(beta)];
    if (nb == 0) continue;
    auto occ = basis[c];
    --occ[static_cast<std::size_t>(beta)];
    ++occ[static_cast<std::size_t>(alpha)];
    op.set(static_cast<std::size_t>(index.at(occ)), c, static_cast<long>(nb));
  }
  return op;
}

std::map<std::vector<int>, int> basis_index(const std::vector<std::vector<int>>& basis) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  return index;
}

void check_bosonic(int m, int n) {
  if (m < 2 || n < 1) throw UnsupportedDim("bosonic generators need m >= 2 and n >= 1");
}

}  // namespace

std::vector<SparseOperator> bosonic_generator_ops(int m, int n) {
  check_bosonic(m, n);
  const auto basis = bosonic_basis(m, n);
  const auto index = basis_index(basis);
  std::vector<SparseOperator> out;
  for (int a = 0; a + 1 < m; ++a) {
    out.push_back(hop(basis, index, a, a + 1));
    out.push_back(hop(basis, index, a + 1, a));
  }
  return out;
}

std::vector<SparseOperator> bosonic_all_ops(int m, int n) {
  check_bosonic(m, n);
  const auto basis = bosonic_basis(m, n);
  const auto index = basis_index(basis);
  std::vector<SparseOperator> out;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a != b) out.push_back(hop(basis, index, a, b));
    }
  }
  return out;
}

SiteBasis so_weight_basis(int d) {
  if (d < 3) throw UnsupportedDim("so(d) needs d >= 3");
  const GaussianRational I = GaussianRational::i();
  const GaussianRational half(Rational(1, 2));
  SiteBasis b{SparseOperator(static_cast<std::size_t>(d)), SparseOperator(static_cast<std::size_t>(d))};
  for (int j = 0; j < d / 2; ++j) {
    const auto a = static_cast<std::size_t>(2 * j);
    b.to_standard.set(a, a, 1);
    b.to_standard.set(a + 1, a, I);
    b.to_standard.set(a, a + 1, 1);
    b.to_standard.set(a + 1, a + 1, -I);
    b.from_standard.set(a, a, half);
    b.from_standard.set(a, a + 1, -I * half);
    b.from_standard.set(a + 1, a, half);
    b.from_standard.set(a + 1, a + 1, I * half);
  }
  if (d % 2 == 1) {
    const auto last = static_cast<std::size_t>(d - 1);
    b.to_standard.set(last, last, 1);
    b.from_standard.set(last, last, 1);
  }
  return b;
}

std::string to_string(Group g) {
  switch (g) {
    case Group::su:
      return "su";
    case Group::so:
      return "so";
    case Group::boson:
      return "boson";
  }
  return "su";
}

Group parse_group(const std::string& name) {
  if (name == "su") return Group::su;
  if (name == "so") return Group::so;
  if (name == "boson") return Group::boson;
  throw Error("unknown group '" + name + "' (expected su|so|boson)");
}

GeneratorSet make_generators(Group group, int dim, int bosons, bool all_roots) {
  GeneratorSet g;
  g.group = group;
  switch (group) {
    case Group::su:
      g.d = dim;
      g.ops = all_roots ? su_all_root_ops(dim) : su_simple_root_ops(dim);
      break;
    case Group::so:
      g.d = dim;
      g.ops = all_roots ? so_all_ops(dim) : so_simple_root_ops(dim);
      if (!all_roots) g.weight_basis = so_weight_basis(dim);
      break;
    case Group::boson:
      g.ops = all_roots ? bosonic_all_ops(dim, bosons) : bosonic_generator_ops(dim, bosons);
      g.d = static_cast<int>(g.ops.front().dim());
      g.site_norms2 = bosonic_site_norms2(dim, bosons);
      break;
  }
  if (g.site_norms2.empty()) g.site_norms2.assign(static_cast<std::size_t>(g.d), Rational(1));
  return g;
}

}  // namespace lme
