#include "rspath/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace rspath {

namespace {

std::vector<int> stripped(const std::vector<int>& parts) {
  std::vector<int> out = parts;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// ν with λ/ν a horizontal strip of the given size: λ_{i+1} <= ν_i <= λ_i.
void for_each_strip_removal(const std::vector<int>& lambda, int size,
                            const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> nu(lambda.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == lambda.size()) {
      if (remaining == 0) visit(nu);
      return;
    }
    const int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int v = lambda[i]; v >= lo; --v) {
      const int removed = lambda[i] - v;
      if (removed > remaining) break;
      nu[i] = v;
      rec(i + 1, remaining - removed);
    }
  };
  rec(0, size);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be non-increasing");
  }
}

Partition Partition::from_weyl(std::span<const Value> x) {
  std::vector<int> parts;
  for (auto it = x.rbegin(); it != x.rend(); ++it) parts.push_back(static_cast<int>(*it));
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::length() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int v) { return v > 0; }));
}

std::vector<int> Partition::padded(int k) const {
  if (length() > k) throw DomainError("partition " + to_string() + " has more than " + std::to_string(k) + " parts");
  std::vector<int> out(k, 0);
  for (int i = 0; i < k && i < static_cast<int>(parts_.size()); ++i) out[i] = parts_[i];
  return out;
}

std::vector<int> Partition::reversed(int k) const {
  auto out = padded(k);
  std::reverse(out.begin(), out.end());
  return out;
}

bool Partition::contains(const Partition& other) const {
  const std::size_t n = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((*this)[i] < other[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  auto p = stripped(parts_);
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

bool Partition::operator==(const Partition& other) const {
  return stripped(parts_) == stripped(other.parts_);
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  return stripped(parts_) <=> stripped(other.parts_);
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw DomainError("empty row inside tableau");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) throw DomainError("row lengths must be non-increasing");
    for (int v : rows_[r]) {
      if (v < 1) throw DomainError("tableau entries must be positive");
    }
  }
}

std::size_t Tableau::size() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

std::vector<int> Tableau::weight(int k) const {
  std::vector<int> w(k, 0);
  for (const auto& r : rows_) {
    for (int v : r) {
      if (v > k) throw DomainError("entry exceeds alphabet");
      ++w[v - 1];
    }
  }
  return w;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0 && rows_[r][c] < rows_[r][c - 1]) return false;
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<int> all;
  for (const auto& r : rows_) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0 && r[c] == r[c - 1]) return false;
      all.push_back(r[c]);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Tableau::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += "[";
    for (int v : r) s += std::to_string(v) + (v > 9 ? " " : "");
    s += "]";
  }
  return s;
}

Tableau column_insert(const Tableau& t, int a) {
  if (a < 1) throw DomainError("letters must be positive");
  Tableau out = t;
  auto& rows = out.rows_;
  for (std::size_t c = 0;; ++c) {
    std::size_t height = 0;
    while (height < rows.size() && rows[height].size() > c) ++height;
    // smallest entry >= a; columns are strictly increasing so it is the topmost
    std::size_t r = 0;
    while (r < height && rows[r][c] < a) ++r;
    if (r == height) {
      if (height == rows.size()) {
        if (c != 0) throw DomainError("column insertion produced an invalid shape");
        rows.push_back({a});
      } else {
        if (rows[height].size() != c) throw DomainError("column insertion produced an invalid shape");
        rows[height].push_back(a);
      }
      return out;
    }
    std::swap(rows[r][c], a);
  }
}

Tableau row_insert(const Tableau& t, int a) {
  if (a < 1) throw DomainError("letters must be positive");
  Tableau out = t;
  auto& rows = out.rows_;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({a});
      return out;
    }
    auto it = std::upper_bound(rows[r].begin(), rows[r].end(), a);
    if (it == rows[r].end()) {
      rows[r].push_back(a);
      return out;
    }
    std::swap(*it, a);
  }
}

Tableau add_cell(const Tableau& t, std::size_t row, int entry) {
  Tableau out = t;
  if (row > out.rows_.size()) throw DomainError("cannot add a cell below the next row");
  if (row == out.rows_.size()) out.rows_.emplace_back();
  out.rows_[row].push_back(entry);
  if (row > 0 && out.rows_[row].size() > out.rows_[row - 1].size()) throw DomainError("cell addition breaks the shape");
  return out;
}

RSResult rs(const Word& w, InsertionMode mode) {
  RSResult result;
  for (std::size_t n = 0; n < w.size(); ++n) {
    Tableau next = mode == InsertionMode::Column ? column_insert(result.p, w[n]) : row_insert(result.p, w[n]);
    // the new box is the unique row whose length grew
    const auto& old_rows = result.p.rows();
    const auto& new_rows = next.rows();
    std::size_t grown = 0;
    while (grown < old_rows.size() && old_rows[grown].size() == new_rows[grown].size()) ++grown;
    result.q = add_cell(result.q, grown, static_cast<int>(n) + 1);
    result.p = std::move(next);
  }
  return result;
}

Tableau tableau_from_array(const ArrayRows& d) {
  const int k = static_cast<int>(d.size());
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= k; ++r) {
    std::vector<int> row;
    Value previous = 0;
    for (int j = 1; j <= k - r + 1; ++j) {
      const Value total = d[j - 1].at(r - 1);
      if (total < previous) throw DomainError("array is not the image of a Pi_k path");
      row.insert(row.end(), static_cast<std::size_t>(total - previous), r + j - 1);
      previous = total;
    }
    rows.push_back(std::move(row));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (const auto& row : rows) {
    if (row.empty()) throw DomainError("array is not the image of a Pi_k path");
  }
  Tableau t(std::move(rows));
  if (!t.is_semistandard()) throw DomainError("array does not give a semistandard tableau");
  return t;
}

Tableau tableau_from_array(const TriangularArray& array, std::size_t n) { return tableau_from_array(array.at(n)); }

ArrayRows array_from_tableau(const Tableau& t, int k) {
  if (static_cast<int>(t.rows().size()) > k) throw DomainError("tableau has more than k rows");
  ArrayRows d(k);
  for (int j = 1; j <= k; ++j) {
    for (int r = 1; r <= k - j + 1; ++r) {
      Value count = 0;
      if (r <= static_cast<int>(t.rows().size())) {
        for (int v : t.rows()[r - 1]) count += v <= r + j - 1 ? 1 : 0;
      }
      d[j - 1].push_back(count);
    }
  }
  return d;
}

Integer num_standard(const Partition& lambda) {
  const auto parts = stripped(lambda.parts());
  const int n = lambda.size();
  Integer hooks = 1;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) ++below;
      hooks *= parts[r] - c + below;
    }
  }
  return factorial(static_cast<unsigned>(n)) / hooks;
}

Integer num_standard_two_row(int n, int d2) {
  if (d2 < 0 || 2 * d2 > n) throw DomainError("(n - d2, d2) is not a partition");
  return factorial(n) * (n - 2 * d2 + 1) / (factorial(n - d2 + 1) * factorial(d2));
}

Integer kostka(const Partition& lambda, std::span<const int> mu) {
  const int total = std::accumulate(mu.begin(), mu.end(), 0);
  if (total != lambda.size()) throw DomainError("Kostka number needs |lambda| = |mu|");
  for (int m : mu) {
    if (m < 0) throw DomainError("weights must be non-negative");
  }
  std::function<Integer(const std::vector<int>&, std::size_t)> rec = [&](const std::vector<int>& l,
                                                                         std::size_t m) -> Integer {
    if (m == 0) return std::all_of(l.begin(), l.end(), [](int v) { return v == 0; }) ? 1 : 0;
    // entries equal to m fill a horizontal strip and only rows 1..m
    for (std::size_t i = m; i < l.size(); ++i) {
      if (l[i] > 0) return 0;
    }
    Integer sum = 0;
    for_each_strip_removal(l, mu[m - 1], [&](const std::vector<int>& nu) { sum += rec(nu, m - 1); });
    return sum;
  };
  return rec(stripped(lambda.parts()), mu.size());
}

int greene(const Word& w, int i) {
  if (i < 1 || i > w.k()) throw DomainError("greene index must be in 1..k");
  // state: sorted last letters of the i subsequences (0 = not started)
  std::map<std::vector<int>, int> best{{std::vector<int>(i, 0), 0}};
  for (std::size_t n = w.size(); n-- > 0;) {
    const int a = w[n];
    std::map<std::vector<int>, int> next = best;
    for (const auto& [state, length] : best) {
      for (int s = 0; s < i; ++s) {
        if (state[s] > a || (s > 0 && state[s] == state[s - 1])) continue;
        auto moved = state;
        moved[s] = a;
        std::sort(moved.begin(), moved.end());
        auto& slot = next[moved];
        slot = std::max(slot, length + 1);
      }
    }
    best = std::move(next);
  }
  int out = 0;
  for (const auto& [state, length] : best) out = std::max(out, length);
  return out;
}

std::vector<Partition> recording_shapes(const Tableau& q) {
  if (!q.is_standard()) throw DomainError("recording tableau must be standard");
  const std::size_t n = q.size();
  std::vector<std::size_t> row_of(n + 1);
  for (std::size_t r = 0; r < q.rows().size(); ++r) {
    for (int v : q.rows()[r]) row_of[v] = r;
  }
  std::vector<Partition> chain;
  std::vector<int> parts;
  for (std::size_t m = 1; m <= n; ++m) {
    if (row_of[m] == parts.size()) parts.push_back(0);
    ++parts[row_of[m]];
    chain.emplace_back(parts);
  }
  return chain;
}

bool is_growth_chain(const std::vector<Partition>& chain) {
  Partition previous;
  for (const auto& shape : chain) {
    if (shape.size() != previous.size() + 1 || !shape.contains(previous)) return false;
    previous = shape;
  }
  return true;
}

Tableau tableau_from_chain(const std::vector<Partition>& chain) {
  if (!is_growth_chain(chain)) throw DomainError("not a one-box growth chain");
  Tableau t;
  Partition previous;
  for (std::size_t m = 0; m < chain.size(); ++m) {
    std::size_t r = 0;
    while (chain[m][r] == previous[r]) ++r;
    t = add_cell(t, r, static_cast<int>(m) + 1);
    previous = chain[m];
  }
  return t;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == max_parts) return;
    for (int v = std::min(remaining, cap); v >= 1; --v) {
      parts.push_back(v);
      rec(remaining - v, v);
      parts.pop_back();
    }
  };
  if (n < 0) return out;
  rec(n, n);
  return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int k) {
  const auto parts = stripped(lambda.parts());
  std::vector<Tableau> out;
  if (static_cast<int>(parts.size()) > k) return out;
  std::vector<std::vector<int>> rows;
  for (int p : parts) rows.emplace_back(p, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == rows.size()) {
      out.emplace_back(rows);
      return;
    }
    if (c == rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    // the column below still needs room for strictly larger entries
    std::size_t below = 0;
    for (std::size_t rr = r + 1; rr < rows.size() && rows[rr].size() > c; ++rr) ++below;
    const int hi = k - static_cast<int>(below);
    for (int v = lo; v <= hi; ++v) {
      rows[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<Tableau> out;
  const auto target = stripped(lambda.parts());
  const int n = lambda.size();
  std::vector<Partition> chain;
  std::vector<int> parts(target.size(), 0);
  std::function<void(int)> rec = [&](int m) {
    if (m == n) {
      out.push_back(n == 0 ? Tableau() : tableau_from_chain(chain));
      return;
    }
    for (std::size_t r = 0; r < target.size(); ++r) {
      if (parts[r] < target[r] && (r == 0 || parts[r] < parts[r - 1])) {
        ++parts[r];
        chain.emplace_back(parts);
        rec(m + 1);
        chain.pop_back();
        --parts[r];
      }
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> compositions_of(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k, 0);
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == k - 1) {
      c[i] = remaining;
      out.push_back(c);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      c[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  rec(0, n);
  return out;
}

nlohmann::json to_json(const Tableau& t) { return {{"rows", t.rows()}}; }

Tableau tableau_from_json(const nlohmann::json& j) {
  Tableau t(j.at("rows").get<std::vector<std::vector<int>>>());
  if (!t.is_semistandard()) throw DomainError("tableau rows must be weakly increasing with strictly increasing columns");
  return t;
}

}  // namespace rspath
