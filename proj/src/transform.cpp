#include "rspath/transform.hpp"

#include <algorithm>
#include <functional>

namespace rspath {

MultiPath dmap(const MultiPath& x) {
  if (x.k() == 0) return x;
  std::vector<Path> out{x[0]};
  for (int i = 1; i < x.k(); ++i) out.push_back(inf_conv(out.back(), x[i]));
  return MultiPath(std::move(out));
}

MultiPath tmap(const MultiPath& x) {
  if (x.k() < 2) throw DomainError("T needs at least two components");
  MultiPath d = dmap(x);
  std::vector<Path> out;
  for (int i = 1; i < x.k(); ++i) out.push_back(sup_conv(x[i], d[i - 1]));
  return MultiPath(std::move(out));
}

MultiPath gmap(const MultiPath& x) {
  std::vector<Path> out;
  MultiPath level = x;
  while (level.k() > 1) {
    MultiPath d = dmap(level);
    out.push_back(d[d.k() - 1]);
    level = tmap(level);
  }
  if (level.k() == 1) out.push_back(level[0]);
  return MultiPath(std::move(out));
}

Path sup_fold(const MultiPath& x) {
  if (x.k() == 0) throw DomainError("empty multipath");
  Path acc = x[x.k() - 1];
  for (int i = x.k() - 2; i >= 0; --i) acc = sup_conv(acc, x[i]);
  return acc;
}

TriangularArray::TriangularArray(std::vector<MultiPath> d_rows, std::vector<MultiPath> t_rows)
    : d_(std::move(d_rows)), t_(std::move(t_rows)) {
  const int k = static_cast<int>(d_.size());
  if (static_cast<int>(t_.size()) != std::max(k - 1, 0)) throw DomainError("array needs k-1 t rows");
  for (int i = 0; i < k; ++i) {
    if (d_[i].k() != k - i) throw DomainError("d row has wrong dimension");
    if (i + 1 < k && t_[i].k() != k - i - 1) throw DomainError("t row has wrong dimension");
  }
}

ArrayRows TriangularArray::at(std::size_t n) const {
  ArrayRows rows;
  for (const auto& row : d_) rows.push_back(row.at(n));
  return rows;
}

ArrayRows TriangularArray::queues_at(std::size_t n) const { return queues_of(at(n)); }

MultiPath TriangularArray::g() const {
  std::vector<Path> out;
  for (int i = 0; i < k(); ++i) out.push_back(d_[i][k() - i - 1]);
  return MultiPath(std::move(out));
}

ArrayRows queues_of(const ArrayRows& d) {
  ArrayRows q;
  for (const auto& row : d) {
    if (row.size() < 2) continue;
    std::vector<Value> r;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) r.push_back(row[i] - row[i + 1]);
    q.push_back(std::move(r));
  }
  return q;
}

TriangularArray triangular(const MultiPath& x) {
  std::vector<MultiPath> d_rows, t_rows;
  MultiPath level = x;
  for (int i = 0; i < x.k(); ++i) {
    d_rows.push_back(dmap(level));
    if (level.k() > 1) {
      level = tmap(level);
      t_rows.push_back(level);
    }
  }
  return TriangularArray(std::move(d_rows), std::move(t_rows));
}

TandemCascade::TandemCascade(int k) : k_(k) {
  if (k < 1) throw DomainError("alphabet size must be positive");
  for (int j = 0; j < k; ++j) d_.emplace_back(k - j, 0);
  fed_.assign(k, 0);
}

const std::vector<int>& TandemCascade::push(int letter) {
  if (letter < 1 || letter > k_) throw DomainError("letter outside alphabet");
  ++time_;
  int a = letter;
  for (int j = 0; j < k_; ++j) {
    fed_[j] = a;
    if (a == 0) continue;
    auto& d = d_[j];
    const int m = static_cast<int>(d.size());
    int emitted = 0;
    if (m == 1) {
      ++d[0];
    } else if (a == 1) {
      ++d[0];
      emitted = 1;
    } else if (a == m) {
      if (d[m - 1] < d[m - 2]) {
        ++d[m - 1];
      } else {
        emitted = m - 1;
      }
    } else if (d[a - 1] < d[a - 2]) {
      ++d[a - 1];
      emitted = a;
    } else {
      emitted = a - 1;
    }
    a = emitted;
  }
  return fed_;
}

std::vector<Value> TandemCascade::g() const {
  std::vector<Value> out;
  for (int j = 0; j < k_; ++j) out.push_back(d_[j].back());
  return out;
}

TriangularArray triangular_incremental(const Word& w) {
  const int k = w.k();
  const std::size_t horizon = w.size();
  // values[j][i][n]
  std::vector<std::vector<std::vector<Value>>> dv(k), tv(std::max(k - 1, 0));
  for (int j = 0; j < k; ++j) dv[j].assign(k - j, std::vector<Value>(horizon + 1, 0));
  for (int j = 0; j + 1 < k; ++j) tv[j].assign(k - j - 1, std::vector<Value>(horizon + 1, 0));

  TandemCascade cascade(k);
  for (std::size_t n = 1; n <= horizon; ++n) {
    const std::vector<int>& fed = cascade.push(w[n - 1]);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < k - j; ++i) dv[j][i][n] = cascade.state()[j][i];
    }
    // t^(j) is the input of series j+1
    for (int j = 0; j + 1 < k; ++j) {
      for (int i = 0; i < k - j - 1; ++i) tv[j][i][n] = tv[j][i][n - 1] + (fed[j + 1] == i + 1 ? 1 : 0);
    }
  }

  auto to_multipath = [](std::vector<std::vector<Value>>& comps) {
    std::vector<Path> paths;
    for (auto& c : comps) paths.emplace_back(std::move(c));
    return MultiPath(std::move(paths));
  };
  std::vector<MultiPath> d_rows, t_rows;
  for (auto& row : dv) d_rows.push_back(to_multipath(row));
  for (auto& row : tv) t_rows.push_back(to_multipath(row));
  return TriangularArray(std::move(d_rows), std::move(t_rows));
}

namespace {

using Pattern = std::vector<std::vector<Value>>;  // pattern[i-1] = λ^(i), i parts

void enumerate_patterns(Pattern& pattern, int level, std::vector<Pattern>& out) {
  if (level == 0) {
    out.push_back(pattern);
    return;
  }
  const auto& above = pattern[level];
  auto& row = pattern[level - 1];
  row.assign(level, 0);
  std::function<void(int)> fill = [&](int j) {
    if (j == level) {
      enumerate_patterns(pattern, level - 1, out);
      return;
    }
    for (Value v = above[j + 1]; v <= above[j]; ++v) {
      row[j] = v;
      fill(j + 1);
    }
  };
  fill(0);
}

// d^(j)_r = λ^(r+j-1)_r
ArrayRows array_of_pattern(const Pattern& pattern, int k) {
  ArrayRows d(k);
  for (int j = 1; j <= k; ++j) {
    for (int r = 1; r <= k - j + 1; ++r) d[j - 1].push_back(pattern[r + j - 2][r - 1]);
  }
  return d;
}

std::vector<ArrayRows> terminal_arrays(const std::vector<Value>& g_end) {
  const int k = static_cast<int>(g_end.size());
  Pattern pattern(k);
  pattern[k - 1].assign(g_end.rbegin(), g_end.rend());
  std::vector<Pattern> patterns;
  enumerate_patterns(pattern, k - 1, patterns);
  std::vector<ArrayRows> out;
  for (const auto& p : patterns) out.push_back(array_of_pattern(p, k));
  return out;
}

}  // namespace

std::optional<MultiPath> recover_path(const MultiPath& g, const ArrayRows& terminal) {
  const int k = g.k();
  const std::size_t horizon = g.horizon();
  if (k == 0 || static_cast<int>(terminal.size()) != k) throw DomainError("terminal array has wrong shape");
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(terminal[j].size()) != k - j) throw DomainError("terminal array has wrong shape");
    if (terminal[j].back() != g[j](horizon)) return std::nullopt;
  }

  try {
    MultiPath level(std::vector<Path>{g[k - 1]});
    for (int j = k - 1; j >= 1; --j) {
      const int m = k - j + 1;
      const MultiPath& t = level;
      std::vector<std::vector<Value>> x(m);
      std::vector<Value> d_i = g[j - 1].values();
      for (int i = m; i >= 2; --i) {
        const auto& t_prev = t[i - 2].values();
        std::vector<Value> q(horizon + 1);
        q[horizon] = terminal[j - 1][i - 2] - terminal[j - 1][i - 1];
        if (q[horizon] < 0) return std::nullopt;
        for (std::size_t n = horizon; n-- > 0;) {
          q[n] = std::max<Value>(0, q[n + 1] + (d_i[n + 1] - d_i[n]) - (t_prev[n + 1] - t_prev[n]));
        }
        if (q[0] != 0) return std::nullopt;
        x[i - 1].resize(horizon + 1);
        for (std::size_t n = 0; n <= horizon; ++n) {
          x[i - 1][n] = t_prev[n] - q[n];
          d_i[n] += q[n];
        }
      }
      x[0] = d_i;
      std::vector<Path> paths;
      for (auto& c : x) paths.emplace_back(std::move(c));
      level = MultiPath(std::move(paths));
    }
    if (!level.in_pi() || !(gmap(level) == g)) return std::nullopt;
    return level;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::vector<MultiPath> recover_all(const MultiPath& g) {
  if (!g.in_weyl_chamber()) return {};
  std::vector<MultiPath> out;
  for (const auto& terminal : terminal_arrays(g.at(g.horizon()))) {
    if (auto x = recover_path(g, terminal)) out.push_back(std::move(*x));
  }
  return out;
}

bool Recovery::all_certified() const {
  return std::all_of(certified.begin(), certified.end(), [](bool b) { return b; });
}

Recovery recover(const MultiPath& g, std::size_t n) {
  if (n > g.horizon()) throw DomainError("time beyond horizon");
  auto candidates = recover_all(g);
  if (candidates.empty()) throw DomainError("path is not in the image of G");
  Recovery r;
  r.values = candidates.front().at(n);
  r.certified.assign(r.values.size(), true);
  for (const auto& c : candidates) {
    auto v = c.at(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != r.values[i]) r.certified[i] = false;
    }
  }
  return r;
}

Recovery recover_reversed(const MultiPath& g, std::size_t n) {
  Recovery r = recover(g, n);
  std::reverse(r.values.begin(), r.values.end());
  std::reverse(r.certified.begin(), r.certified.end());
  return r;
}

std::vector<CouplingStep> coupling_trace(const Path& w, const Path& x, const Path& y) {
  if (!MultiPath({w, x, y}).in_lambda()) throw DomainError("(w, x, y) must lie in Lambda_3");
  const Path d = inf_conv(x, y);
  std::vector<Value> xu(x.horizon() + 1);
  for (std::size_t n = 0; n < xu.size(); ++n) xu[n] = x(n) + y(n) - d(n);
  const Path x_plus_u(std::move(xu));

  const Path d1 = inf_conv(w, x), d2 = inf_conv(d1, y);
  const Path e1 = inf_conv(w, x_plus_u), e2 = inf_conv(e1, d);

  std::vector<CouplingStep> trace;
  for (std::size_t n = 0; n <= w.horizon(); ++n) {
    CouplingCase event = CouplingCase::Idle;
    if (n > 0) {
      const Value u_step = (y.step(n) - d.step(n));
      if (w.step(n)) event = CouplingCase::W;
      else if (x.step(n)) event = CouplingCase::X;
      else if (d.step(n)) event = CouplingCase::D;
      else if (u_step) event = CouplingCase::U;
    }
    CouplingStep s{event, w(n) - d1(n), d1(n) - d2(n), w(n) - e1(n), e1(n) - e2(n), x(n) - d(n), false, false};
    s.case_i = s.q2_tilde - s.q2 >= 0 && s.q - s.q2 == 0;
    s.case_ii = s.q2_tilde - s.q2 == 0 && s.q - s.q2 >= 0;
    trace.push_back(s);
  }
  return trace;
}

}  // namespace rspath
