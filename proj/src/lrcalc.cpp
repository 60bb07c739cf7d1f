#include "lme/lrcalc.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "lme/errors.hpp"

namespace lme {

void Decomposition::add(const Partition& nu, const BigInt& mult) {
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(nu, mult);
  if (!inserted) it->second += mult;
}

BigInt Decomposition::multiplicity(const Partition& nu) const {
  auto it = entries_.find(nu);
  return it == entries_.end() ? BigInt(0) : it->second;
}

LabeledDiagram::LabeledDiagram(Partition base, std::vector<std::vector<int>> appended)
    : base_(std::move(base)) {
  const size_t n = std::max(static_cast<size_t>(base_.rows()), appended.size());
  rows_.resize(n);
  for (size_t r = 0; r < n; ++r) {
    rows_[r].base_length = base_.row(static_cast<int>(r) + 1);
    if (r < appended.size()) rows_[r].labels = std::move(appended[r]);
  }
  while (!rows_.empty() && rows_.back().length() == 0) rows_.pop_back();
}

std::vector<int> LabeledDiagram::final_lengths() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.push_back(row.length());
  return out;
}

Partition LabeledDiagram::final_shape() const { return Partition(final_lengths()); }

int LabeledDiagram::max_label() const {
  int m = 0;
  for (const auto& row : rows_) {
    for (int l : row.labels) m = std::max(m, l);
  }
  return m;
}

std::string render_ascii(const LabeledDiagram& f) {
  if (f.rows().empty()) return "(empty)\n";
  std::string out;
  for (const auto& row : f.rows()) {
    for (int j = 0; j < row.base_length; ++j) out += "[ ]";
    for (int l : row.labels) out += "[" + std::to_string(l) + "]";
    out += '\n';
  }
  return out;
}

int ValidationReport::first_failure() const {
  if (!young_shape) return 1;
  if (!distinct_columns) return 2;
  if (!row_counting) return 3;
  if (!column_counting) return 4;
  if (!row_bound) return 5;
  return 0;
}

namespace {

bool non_increasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] < v[i]) return false;
  }
  return true;
}

// counts[label] cumulative; checks #(v) <= #(v-1) for v = 2..L.
bool dominated(const std::vector<int>& counts) {
  for (size_t v = 2; v < counts.size(); ++v) {
    if (counts[v] > counts[v - 1]) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_filling(const LabeledDiagram& f, int m) {
  ValidationReport rep;
  const auto& rows = f.rows();
  const int labels = f.max_label();

  // 1: every label stage leaves a Young diagram, which needs labels to be
  // appended in increasing order within a row.
  for (const auto& row : rows) {
    if (!std::is_sorted(row.labels.begin(), row.labels.end())) rep.young_shape = false;
    for (int l : row.labels) {
      if (l < 1) rep.young_shape = false;
    }
  }
  for (int stage = 0; stage <= labels && rep.young_shape; ++stage) {
    std::vector<int> lengths;
    for (const auto& row : rows) {
      int len = row.base_length;
      for (int l : row.labels) {
        if (l <= stage) ++len;
      }
      lengths.push_back(len);
    }
    if (!non_increasing(lengths)) rep.young_shape = false;
  }

  // Column of each appended box (1-based, left to right).
  std::map<int, std::vector<int>> by_column;
  for (const auto& row : rows) {
    int col = row.base_length;
    for (int l : row.labels) by_column[++col].push_back(l);
  }

  // 2
  for (const auto& [col, ls] : by_column) {
    std::set<int> seen(ls.begin(), ls.end());
    if (seen.size() != ls.size()) rep.distinct_columns = false;
  }

  // 3: rows 1..r from the top.
  {
    std::vector<int> counts(static_cast<size_t>(labels) + 1, 0);
    for (const auto& row : rows) {
      for (int l : row.labels) {
        if (l >= 1) ++counts[static_cast<size_t>(l)];
      }
      if (!dominated(counts)) rep.row_counting = false;
    }
  }

  // 4: columns 1..c numbered from the right.
  {
    std::vector<int> counts(static_cast<size_t>(labels) + 1, 0);
    for (auto it = by_column.rbegin(); it != by_column.rend(); ++it) {
      for (int l : it->second) {
        if (l >= 1) ++counts[static_cast<size_t>(l)];
      }
      if (!dominated(counts)) rep.column_counting = false;
    }
  }

  // 5
  if (m > 0) {
    int nonzero = 0;
    for (const auto& row : rows) {
      if (row.length() > 0) ++nonzero;
    }
    rep.row_bound = nonzero <= m;
  }
  return rep;
}

namespace detail {

namespace {

// Label-by-label placement of eta's rows into lambda. Each label forms a
// horizontal strip (conditions 1 and 2), row counting is pruned as rows are
// filled top-down, column counting is checked once a label is complete.
class FillingWalker {
 public:
  FillingWalker(const Partition& lambda, const Partition& eta, int row_limit,
                const Partition* target)
      : eta_(eta), rows_(row_limit), target_(target) {
    cur_.assign(static_cast<size_t>(rows_), 0);
    for (int r = 0; r < rows_; ++r) cur_[static_cast<size_t>(r)] = lambda.row(r + 1);
    const size_t labels = static_cast<size_t>(eta.rows());
    place_.assign(labels + 1, std::vector<int>(static_cast<size_t>(rows_), 0));
    start_.assign(labels + 1, std::vector<int>(static_cast<size_t>(rows_), 0));
  }

  template <class Visit>
  void run(Visit&& visit) {
    stop_ = false;
    label(1, visit);
  }

  const std::vector<int>& lengths() const { return cur_; }

  std::vector<std::vector<int>> appended() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(rows_));
    for (int l = 1; l <= eta_.rows(); ++l) {
      for (int r = 0; r < rows_; ++r) {
        for (int j = 0; j < place_[l][r]; ++j) out[static_cast<size_t>(r)].push_back(l);
      }
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
  }

 private:
  template <class Visit>
  void label(int l, Visit& visit) {
    if (stop_) return;
    if (l > eta_.rows()) {
      if (!visit(*this)) stop_ = true;
      return;
    }
    saved_.push_back(cur_);
    distribute(l, 0, eta_.row(l), 0, 0, visit);
    cur_ = saved_.back();
    saved_.pop_back();
  }

  // prefix_l / prefix_prev: boxes with label l / l-1 in rows above r.
  template <class Visit>
  void distribute(int l, int r, int remaining, int prefix_l, int prefix_prev, Visit& visit) {
    if (stop_) return;
    const auto& before = saved_.back();
    if (r == rows_) {
      if (remaining != 0) return;
      if (l > 1 && !columns_ok(l)) return;
      label(l + 1, visit);
      return;
    }
    const size_t ur = static_cast<size_t>(r);
    int cap = remaining;
    if (r > 0) cap = std::min(cap, before[ur - 1] - before[ur]);
    if (target_ != nullptr) cap = std::min(cap, target_->row(r + 1) - before[ur]);
    const int prev_here = l > 1 ? place_[static_cast<size_t>(l - 1)][ur] : 0;
    for (int a = cap; a >= 0; --a) {
      if (l > 1 && prefix_l + a > prefix_prev + prev_here) continue;
      place_[static_cast<size_t>(l)][ur] = a;
      start_[static_cast<size_t>(l)][ur] = before[ur];
      cur_[ur] = before[ur] + a;
      distribute(l, r + 1, remaining - a, prefix_l + a, prefix_prev + prev_here, visit);
      if (stop_) return;
    }
    place_[static_cast<size_t>(l)][ur] = 0;
    cur_[ur] = before[ur];
  }

  bool columns_ok(int l) const {
    int width = 0;
    for (int x : cur_) width = std::max(width, x);
    std::vector<int> here(static_cast<size_t>(width) + 2, 0);
    std::vector<int> prev(static_cast<size_t>(width) + 2, 0);
    for (int r = 0; r < rows_; ++r) {
      const size_t ur = static_cast<size_t>(r);
      for (int j = 1; j <= place_[static_cast<size_t>(l)][ur]; ++j) {
        ++here[static_cast<size_t>(start_[static_cast<size_t>(l)][ur] + j)];
      }
      for (int j = 1; j <= place_[static_cast<size_t>(l - 1)][ur]; ++j) {
        ++prev[static_cast<size_t>(start_[static_cast<size_t>(l - 1)][ur] + j)];
      }
    }
    int ch = 0;
    int cp = 0;
    for (int c = width; c >= 1; --c) {
      ch += here[static_cast<size_t>(c)];
      cp += prev[static_cast<size_t>(c)];
      if (ch > cp) return false;
    }
    return true;
  }

  const Partition& eta_;
  int rows_;
  const Partition* target_;
  std::vector<int> cur_;
  std::deque<std::vector<int>> saved_;  // row lengths entering each label
  std::vector<std::vector<int>> place_;  // [label][row] boxes appended
  std::vector<std::vector<int>> start_;  // [label][row] row length before the label
  bool stop_ = false;
};

int row_limit(const Partition& lambda, const Partition& eta, int m, const Partition* target) {
  if (target != nullptr) return target->rows();
  if (m > 0) return m;
  return lambda.rows() + eta.rows();
}

void check_rows(const Partition& lambda, const Partition& eta, int m) {
  if (m <= 0) return;
  if (lambda.rows() > m || eta.rows() > m) {
    throw TooManyRows("factors must have at most " + std::to_string(m) + " rows");
  }
}

}  // namespace

void for_each_filling(const Partition& lambda, const Partition& eta, int m,
                      const Partition* target,
                      const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  check_rows(lambda, eta, m);
  if (target != nullptr && !contains(*target, lambda)) return;
  FillingWalker walker(lambda, eta, row_limit(lambda, eta, m, target), target);
  walker.run([&](const FillingWalker& w) { return visit(w.appended()); });
}

Decomposition expand_counts(const Partition& lambda, const Partition& eta, int m,
                            int max_width) {
  check_rows(lambda, eta, m);
  std::map<std::vector<int>, long long> hist;
  FillingWalker walker(lambda, eta, row_limit(lambda, eta, m, nullptr), nullptr);
  walker.run([&](const FillingWalker& w) {
    const auto& len = w.lengths();
    if (max_width <= 0 || len.front() <= max_width) ++hist[len];
    return true;
  });
  Decomposition out;
  for (const auto& [len, count] : hist) out.add(Partition(len), BigInt(static_cast<long>(count)));
  return out;
}

}  // namespace detail

Decomposition lr_expand(const Partition& lambda, const Partition& eta, int m) {
  return detail::expand_counts(lambda, eta, m);
}

std::vector<LabeledDiagram> enumerate_lr_fillings(const Partition& lambda,
                                                  const Partition& eta, int m) {
  std::vector<std::pair<Partition, std::vector<std::vector<int>>>> found;
  detail::for_each_filling(lambda, eta, m, nullptr, [&](const auto& appended) {
    LabeledDiagram d(lambda, appended);
    found.emplace_back(d.final_shape(), appended);
    return true;
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<LabeledDiagram> out;
  out.reserve(found.size());
  for (auto& [shape, appended] : found) out.emplace_back(lambda, std::move(appended));
  return out;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& eta, const Partition& nu) {
  if (nu.weight() != lambda.weight() + eta.weight()) return 0;
  if (!contains(nu, lambda)) return 0;
  long long count = 0;
  detail::for_each_filling(lambda, eta, kGeneralLinear, &nu, [&](const auto&) {
    ++count;
    return true;
  });
  return BigInt(static_cast<long>(count));
}

BigInt lr_skew_coefficient(const Partition& gamma, const Partition& alpha,
                           const Partition& beta) {
  if (!contains(gamma, alpha)) {
    throw NotContained(alpha.key() + " is not contained in " + gamma.key());
  }
  if (gamma.weight() - alpha.weight() != beta.weight()) return 0;
  const int labels = beta.rows();
  const int rows = gamma.rows();

  // State after a row: label counts so far, then the labels of that row in
  // the columns shared with the next row's cells.
  using Key = std::vector<int>;
  std::map<Key, BigInt> states;
  states.emplace(Key(static_cast<size_t>(labels), 0), BigInt(1));

  for (int r = 1; r <= rows; ++r) {
    const int lo = alpha.row(r) + 1;
    const int hi = gamma.row(r);
    // Columns of this row that sit under cells of row r-1.
    const int above_lo = std::max(lo, alpha.row(r - 1) + 1);
    const int above_hi = std::min(hi, gamma.row(r - 1));
    // Columns of this row that sit above cells of row r+1.
    const int below_lo = std::max(lo, alpha.row(r + 1) + 1);
    const int below_hi = std::min(hi, gamma.row(r + 1));

    std::map<Key, BigInt> next;
    for (const auto& [key, count] : states) {
      std::vector<int> content(key.begin(), key.begin() + labels);
      const std::vector<int> prev_slice(key.begin() + labels, key.end());
      // prev_slice covers columns [prev_below_lo, prev_below_hi] of row r-1,
      // which equals [above_lo, above_hi] here.
      std::vector<int> row(static_cast<size_t>(std::max(0, hi - lo + 1)), 0);

      std::function<void(int, int)> fill = [&](int c, int max_label) {
        if (c < lo) {
          Key k = content;
          for (int cc = below_lo; cc <= below_hi; ++cc) k.push_back(row[static_cast<size_t>(cc - lo)]);
          next[k] += count;
          return;
        }
        int min_label = 1;
        if (c >= above_lo && c <= above_hi) {
          min_label = prev_slice[static_cast<size_t>(c - above_lo)] + 1;
        }
        for (int v = min_label; v <= max_label; ++v) {
          const size_t uv = static_cast<size_t>(v - 1);
          if (content[uv] >= beta.row(v)) continue;
          if (v > 1 && content[uv] + 1 > content[uv - 1]) continue;
          ++content[uv];
          row[static_cast<size_t>(c - lo)] = v;
          fill(c - 1, v);
          --content[uv];
        }
      };
      fill(hi, labels);
    }
    states = std::move(next);
    if (states.empty()) return 0;
  }
  BigInt total = 0;
  for (const auto& [key, count] : states) total += count;
  return total;
}

BigInt lr_oracle_coefficient(const Partition& lambda, const Partition& eta,
                             const Partition& nu) {
  if (nu.weight() != lambda.weight() + eta.weight()) return 0;
  if (!contains(nu, lambda)) return 0;
  // Reading order: rows top to bottom, each row right to left.
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= nu.rows(); ++r) {
    for (int c = nu.row(r); c > lambda.row(r); --c) cells.emplace_back(r, c);
  }
  std::map<std::pair<int, int>, int> tab;
  std::vector<int> counts(static_cast<size_t>(eta.rows()) + 1, 0);
  BigInt total = 0;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == cells.size()) {
      for (int v = 1; v <= eta.rows(); ++v) {
        if (counts[static_cast<size_t>(v)] != eta.row(v)) return;
      }
      ++total;
      return;
    }
    const auto [r, c] = cells[i];
    for (int v = 1; v <= eta.rows(); ++v) {
      const size_t uv = static_cast<size_t>(v);
      if (counts[uv] >= eta.row(v)) continue;
      if (v > 1 && counts[uv] + 1 > counts[uv - 1]) continue;
      auto right = tab.find({r, c + 1});
      if (right != tab.end() && right->second < v) continue;
      auto up = tab.find({r - 1, c});
      if (up != tab.end() && up->second >= v) continue;
      tab[{r, c}] = v;
      ++counts[uv];
      rec(i + 1);
      --counts[uv];
      tab.erase({r, c});
    }
  };
  rec(0);
  return total;
}

}  // namespace lme
