#pragma once

// Slow, definition-level reference implementations used only by tests.

#include <algorithm>
#include <functional>
#include <vector>

#include "rspath/lattice_paths.hpp"

namespace oracle {

using rspath::Value;

// min_{0<=m<=n} [x(m) + y(n) - y(m)], evaluated literally.
inline std::vector<Value> inf_conv(const std::vector<Value>& x, const std::vector<Value>& y) {
  std::vector<Value> out;
  for (std::size_t n = 0; n < x.size(); ++n) {
    Value best = x[0] + y[n] - y[0];
    for (std::size_t m = 0; m <= n; ++m) best = std::min(best, x[m] + y[n] - y[m]);
    out.push_back(best);
  }
  return out;
}

inline std::vector<Value> sup_conv(const std::vector<Value>& x, const std::vector<Value>& y) {
  std::vector<Value> out;
  for (std::size_t n = 0; n < x.size(); ++n) {
    Value best = x[0] + y[n] - y[0];
    for (std::size_t m = 0; m <= n; ++m) best = std::max(best, x[m] + y[n] - y[m]);
    out.push_back(best);
  }
  return out;
}

// Every sequence of length n over {lo..hi}.
inline void sequences(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> s(n, lo);
  while (true) {
    visit(s);
    int i = n - 1;
    while (i >= 0 && s[i] == hi) s[i--] = lo;
    if (i < 0) return;
    ++s[i];
  }
}

inline int longest_strictly_increasing(const std::vector<int>& s) {
  std::vector<int> best(s.size(), 1);
  int out = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (s[i] < s[j]) best[j] = std::max(best[j], best[i] + 1);
    }
    out = std::max(out, best[j]);
  }
  return out;
}

// m[i] = largest union of i disjoint weakly decreasing subsequences of w,
// i = 0..k. A subset splits into i such subsequences exactly when it has no
// strictly increasing subsequence of length i + 1, so every subset of
// positions is scanned.
inline std::vector<int> greene_numbers(const std::vector<int>& w, int k) {
  std::vector<int> m(k + 1, 0);
  const std::size_t n = w.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> sub;
    for (std::size_t p = 0; p < n; ++p) {
      if (mask >> p & 1) sub.push_back(w[p]);
    }
    const int chains = longest_strictly_increasing(sub);
    for (int i = std::max(chains, 1); i <= k; ++i) m[i] = std::max(m[i], static_cast<int>(sub.size()));
  }
  return m;
}

// Longest weakly decreasing subsequence.
inline int longest_weakly_decreasing(const std::vector<int>& w) { return greene_numbers(w, 1)[1]; }

}  // namespace oracle
