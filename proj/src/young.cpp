#include "lme/young.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "lme/errors.hpp"

namespace lme {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Partition::Partition(std::span<const int> parts) {
  size_t len = parts.size();
  while (len > 0 && parts[len - 1] == 0) --len;
  for (size_t i = 0; i < len; ++i) {
    if (parts[i] <= 0) {
      throw NotAPartition("nonpositive interior part at position " + std::to_string(i + 1));
    }
    if (i + 1 < len && parts[i] < parts[i + 1]) {
      throw NotAPartition("parts increase at position " + std::to_string(i + 1));
    }
  }
  parts_.assign(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(len));
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::span<const int>(parts.begin(), parts.size())) {}

int Partition::weight() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::key() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::from_key(const std::string& key) {
  std::vector<int> parts;
  if (!key.empty()) {
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
      try {
        parts.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw NotAPartition("bad partition key '" + key + "'");
      }
    }
  }
  return Partition(parts);
}

Partition make_partition(std::span<const int> parts) { return Partition(parts); }

Partition transpose(const Partition& lambda) {
  std::vector<int> cols;
  for (int c = 1; c <= lambda.row(1); ++c) {
    int h = 0;
    while (h < lambda.rows() && lambda.row(h + 1) >= c) ++h;
    cols.push_back(h);
  }
  return Partition(cols);
}

int weight(const Partition& lambda) { return lambda.weight(); }

BigInt irrep_dim(const Partition& lambda, int m) {
  if (lambda.rows() > m) {
    throw TooManyRows("diagram has " + std::to_string(lambda.rows()) + " rows, SU(" +
                      std::to_string(m) + ") allows at most " + std::to_string(m));
  }
  const Partition t = transpose(lambda);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 1; i <= lambda.rows(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      const int hook = (lambda.row(i) - j) + (t.row(j) - i) + 1;
      num *= m + j - i;
      den *= hook;
    }
  }
  return num / den;
}

bool is_trivial_for(const Partition& lambda, int m) {
  if (lambda.empty()) return true;
  if (lambda.rows() != m) return false;
  return lambda.row(1) == lambda.row(m);
}

Partition reduce_mod(const Partition& lambda, int m) {
  if (lambda.rows() > m) {
    throw TooManyRows("cannot reduce a diagram with more than " + std::to_string(m) + " rows");
  }
  const int full = lambda.row(m);
  std::vector<int> parts;
  for (int p : lambda.parts()) parts.push_back(p - full);
  return Partition(parts);
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.rows() > outer.rows()) return false;
  for (int i = 1; i <= inner.rows(); ++i) {
    if (inner.row(i) > outer.row(i)) return false;
  }
  return true;
}

Partition rectangle(int width, int height) {
  if (width <= 0 || height <= 0) return {};
  std::vector<int> parts(static_cast<size_t>(height), width);
  return Partition(parts);
}

std::string render_ascii(const Partition& lambda) {
  if (lambda.empty()) return "(empty)\n";
  std::string out;
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) out += "[ ]";
    out += '\n';
  }
  return out;
}

std::vector<Partition> partitions_in_box(int max_rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = bound; p >= 1; --p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(max_part);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> partitions_of(int n, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int bound) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(rest, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace lme
