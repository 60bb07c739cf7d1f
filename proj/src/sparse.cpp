#include "lme/sparse.hpp"

#include <string>

#include "lme/errors.hpp"

namespace lme {

std::uint64_t checked_power(std::uint64_t d, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int p = 0; p < n; ++p) {
    if (d != 0 && total > cap / d) {
      throw ResourceBound(std::to_string(d) + "^" + std::to_string(n) + " exceeds dimension cap " +
                          std::to_string(cap));
    }
    total *= d;
  }
  if (total > cap) {
    throw ResourceBound(std::to_string(d) + "^" + std::to_string(n) + " exceeds dimension cap " +
                        std::to_string(cap));
  }
  return total;
}

std::vector<int> decode_index(std::uint64_t flat, int d, int n_parties) {
  std::vector<int> digits(static_cast<std::size_t>(n_parties), 0);
  for (int p = n_parties - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<int>(flat % static_cast<std::uint64_t>(d));
    flat /= static_cast<std::uint64_t>(d);
  }
  return digits;
}

std::uint64_t encode_index(std::span<const int> digits, int d) {
  std::uint64_t flat = 0;
  for (int x : digits) flat = flat * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(x);
  return flat;
}

SparseOperator SparseOperator::identity(std::size_t dim) {
  SparseOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.set(i, i, 1);
  return out;
}

std::size_t SparseOperator::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseOperator::check(std::size_t row, std::size_t col) const {
  if (row >= dim() || col >= dim()) {
    throw IndexOutOfRange("entry (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") outside dimension " + std::to_string(dim()));
  }
}

void SparseOperator::set(std::size_t row, std::size_t col, const GaussianRational& v) {
  check(row, col);
  if (v.is_zero()) {
    cols_[col].erase(row);
  } else {
    cols_[col][row] = v;
  }
}

void SparseOperator::add(std::size_t row, std::size_t col, const GaussianRational& v) {
  check(row, col);
  if (v.is_zero()) return;
  auto& column = cols_[col];
  auto [it, inserted] = column.try_emplace(row, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) column.erase(it);
  }
}

GaussianRational SparseOperator::at(std::size_t row, std::size_t col) const {
  check(row, col);
  const auto& column = cols_[col];
  auto it = column.find(row);
  return it == column.end() ? GaussianRational() : it->second;
}

SparseOperator SparseOperator::transpose() const {
  SparseOperator out(dim());
  for (std::size_t c = 0; c < dim(); ++c) {
    for (const auto& [r, v] : cols_[c]) out.set(c, r, v);
  }
  return out;
}

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out(dim());
  for (std::size_t c = 0; c < dim(); ++c) {
    for (const auto& [r, v] : cols_[c]) out.set(c, r, v.conj());
  }
  return out;
}

bool SparseOperator::is_diagonal() const {
  for (std::size_t c = 0; c < dim(); ++c) {
    for (const auto& [r, v] : cols_[c]) {
      if (r != c) return false;
    }
  }
  return true;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  if (o.dim() != dim()) throw Error("dimension mismatch in operator sum");
  for (std::size_t c = 0; c < dim(); ++c) {
    for (const auto& [r, v] : o.cols_[c]) add(r, c, v);
  }
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& o) {
  if (o.dim() != dim()) throw Error("dimension mismatch in operator difference");
  for (std::size_t c = 0; c < dim(); ++c) {
    for (const auto& [r, v] : o.cols_[c]) add(r, c, -v);
  }
  return *this;
}

SparseOperator& SparseOperator::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    for (auto& c : cols_) c.clear();
    return *this;
  }
  for (auto& c : cols_) {
    for (auto& [r, v] : c) v *= s;
  }
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw Error("dimension mismatch in operator product");
  SparseOperator out(a.dim());
  for (std::size_t c = 0; c < b.dim(); ++c) {
    for (const auto& [k, bv] : b.cols_[c]) {
      for (const auto& [r, av] : a.cols_[k]) out.add(r, c, av * bv);
    }
  }
  return out;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return a * b - b * a;
}

SparseOperator diagonal_action(const SparseOperator& op, int n_parties, std::uint64_t cap,
                               bool parallel) {
  if (n_parties < 1) throw Error("N must be positive");
  const int d = static_cast<int>(op.dim());
  const std::uint64_t total = checked_power(static_cast<std::uint64_t>(d), n_parties, cap);
  std::vector<std::uint64_t> stride(static_cast<std::size_t>(n_parties), 1);
  for (int p = n_parties - 2; p >= 0; --p) {
    stride[static_cast<std::size_t>(p)] =
        stride[static_cast<std::size_t>(p) + 1] * static_cast<std::uint64_t>(d);
  }

  // Column x of the result only depends on x, so columns fill independently.
  std::vector<SparseOperator::Column> cols(total);
  auto fill = [&](std::uint64_t x) {
    auto& col = cols[x];
    const auto digits = decode_index(x, d, n_parties);
    for (int p = 0; p < n_parties; ++p) {
      const int xp = digits[static_cast<std::size_t>(p)];
      const std::uint64_t base = x - static_cast<std::uint64_t>(xp) * stride[static_cast<std::size_t>(p)];
      for (const auto& [r, v] : op.column(static_cast<std::size_t>(xp))) {
        const std::uint64_t y = base + r * stride[static_cast<std::size_t>(p)];
        auto [it, inserted] = col.try_emplace(y, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) col.erase(it);
        }
      }
    }
  };
  const long long n = static_cast<long long>(total);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < n; ++x) fill(static_cast<std::uint64_t>(x));
  } else {
    for (long long x = 0; x < n; ++x) fill(static_cast<std::uint64_t>(x));
  }

  SparseOperator out(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    for (auto& [y, v] : cols[x]) out.set(y, x, v);
  }
  return out;
}

}  // namespace lme
