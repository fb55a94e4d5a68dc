#pragma once

// Continuous-time ⊲/⊳ and the transformation Γ on piecewise-linear paths.
//
//   (f ⊲ g)(t) = inf_{0<=s<=t} [f(s) + g(t) - g(s)]
//   (f ⊳ g)(t) = sup_{0<=s<=t} [f(s) + g(t) - g(s)]
//
// Between breakpoints everything is linear, so the running extremum of f - g
// only needs the breakpoints of f and g plus the points where f - g crosses
// its running extremum. With Scalar = Rational all results are exact.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "rspath/lattice_paths.hpp"
#include "rspath/rational.hpp"

namespace rspath {

/// Continuous piecewise-linear f : [0, horizon] -> R with f(0) = 0.
template <class Scalar>
class PiecewiseLinear {
 public:
  PiecewiseLinear() : t_{Scalar(0)}, v_{Scalar(0)} {}
  PiecewiseLinear(std::vector<Scalar> breakpoints, std::vector<Scalar> values)
      : t_(std::move(breakpoints)), v_(std::move(values)) {
    if (t_.empty() || t_.size() != v_.size()) throw DomainError("breakpoints and values must match");
    if (t_.front() != 0 || v_.front() != 0) throw DomainError("path must start at the origin at time 0");
    for (std::size_t i = 1; i < t_.size(); ++i) {
      if (!(t_[i - 1] < t_[i])) throw DomainError("breakpoints must be strictly increasing");
    }
  }

  static PiecewiseLinear zero(const Scalar& horizon) {
    if (horizon == 0) return {};
    return PiecewiseLinear({Scalar(0), horizon}, {Scalar(0), Scalar(0)});
  }

  const std::vector<Scalar>& breakpoints() const { return t_; }
  const std::vector<Scalar>& values() const { return v_; }
  const Scalar& horizon() const { return t_.back(); }

  Scalar operator()(const Scalar& s) const {
    if (s < 0 || s > horizon()) throw DomainError("time outside [0, horizon]");
    auto it = std::lower_bound(t_.begin(), t_.end(), s);
    const std::size_t b = static_cast<std::size_t>(it - t_.begin());
    if (t_[b] == s) return v_[b];
    return v_[b - 1] + (v_[b] - v_[b - 1]) * (s - t_[b - 1]) / (t_[b] - t_[b - 1]);
  }

  /// Same function on the given (sorted, superset) breakpoint grid.
  PiecewiseLinear on_grid(const std::vector<Scalar>& grid) const {
    std::vector<Scalar> values;
    values.reserve(grid.size());
    for (const auto& s : grid) values.push_back((*this)(s));
    return PiecewiseLinear(grid, std::move(values));
  }

  /// Drops breakpoints where the slope does not change.
  PiecewiseLinear simplified() const {
    std::vector<Scalar> t{t_.front()}, v{v_.front()};
    for (std::size_t i = 1; i + 1 < t_.size(); ++i) {
      const Scalar left = (v_[i] - v.back()) * (t_[i + 1] - t_[i]);
      const Scalar right = (v_[i + 1] - v_[i]) * (t_[i] - t.back());
      if (left != right) {
        t.push_back(t_[i]);
        v.push_back(v_[i]);
      }
    }
    if (t_.size() > 1) {
      t.push_back(t_.back());
      v.push_back(v_.back());
    }
    return PiecewiseLinear(std::move(t), std::move(v));
  }

  Scalar max_value() const { return *std::max_element(v_.begin(), v_.end()); }

 private:
  std::vector<Scalar> t_, v_;
};

template <class Scalar>
std::vector<Scalar> merge_breakpoints(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <class Scalar>
PiecewiseLinear<Scalar> operator+(const PiecewiseLinear<Scalar>& f, const PiecewiseLinear<Scalar>& g) {
  if (f.horizon() != g.horizon()) throw DomainError("paths have different horizons");
  const auto grid = merge_breakpoints(f.breakpoints(), g.breakpoints());
  std::vector<Scalar> v;
  for (const auto& s : grid) v.push_back(f(s) + g(s));
  return PiecewiseLinear<Scalar>(grid, std::move(v));
}

namespace detail {

// g(t) + running extremum of (f - g); lower = true gives the infimum.
template <class Scalar>
PiecewiseLinear<Scalar> running_extremum(const PiecewiseLinear<Scalar>& f, const PiecewiseLinear<Scalar>& g,
                                         bool lower) {
  if (f.horizon() != g.horizon()) throw DomainError("paths have different horizons");
  const auto grid = merge_breakpoints(f.breakpoints(), g.breakpoints());
  std::vector<Scalar> h;
  for (const auto& s : grid) h.push_back(f(s) - g(s));
  auto beyond = [lower](const Scalar& a, const Scalar& b) { return lower ? a < b : a > b; };

  std::vector<Scalar> t{grid.front()}, v{g(grid.front()) + h.front()};
  Scalar m = h.front();
  for (std::size_t b = 1; b < grid.size(); ++b) {
    if (beyond(h[b], m)) {
      if (m != h[b - 1]) {
        const Scalar cross = grid[b - 1] + (h[b - 1] - m) / (h[b - 1] - h[b]) * (grid[b] - grid[b - 1]);
        t.push_back(cross);
        v.push_back(g(cross) + m);
      }
      m = h[b];
    }
    t.push_back(grid[b]);
    v.push_back(g(grid[b]) + m);
  }
  return PiecewiseLinear<Scalar>(std::move(t), std::move(v)).simplified();
}

}  // namespace detail

template <class Scalar>
PiecewiseLinear<Scalar> cinf(const PiecewiseLinear<Scalar>& f, const PiecewiseLinear<Scalar>& g) {
  return detail::running_extremum(f, g, true);
}

template <class Scalar>
PiecewiseLinear<Scalar> csup(const PiecewiseLinear<Scalar>& f, const PiecewiseLinear<Scalar>& g) {
  return detail::running_extremum(f, g, false);
}

/// sup_{r<=s} u(r).
template <class Scalar>
PiecewiseLinear<Scalar> running_max(const PiecewiseLinear<Scalar>& u) {
  return csup(u, PiecewiseLinear<Scalar>::zero(u.horizon()));
}

/// k-dimensional piecewise-linear path on a common breakpoint grid.
template <class Scalar>
class PiecewiseLinearPath {
 public:
  PiecewiseLinearPath() = default;
  /// values[i][b] is coordinate i at breakpoint b.
  PiecewiseLinearPath(std::vector<Scalar> breakpoints, std::vector<std::vector<Scalar>> values) {
    for (auto& row : values) components_.emplace_back(breakpoints, std::move(row));
    if (components_.empty()) throw DomainError("path needs at least one coordinate");
  }
  explicit PiecewiseLinearPath(std::vector<PiecewiseLinear<Scalar>> components) {
    if (components.empty()) throw DomainError("path needs at least one coordinate");
    std::vector<Scalar> grid = components.front().breakpoints();
    for (const auto& c : components) {
      if (c.horizon() != components.front().horizon()) throw DomainError("coordinates have different horizons");
      grid = merge_breakpoints(grid, c.breakpoints());
    }
    for (const auto& c : components) components_.push_back(c.on_grid(grid));
  }

  int k() const { return static_cast<int>(components_.size()); }
  const Scalar& horizon() const { return components_.front().horizon(); }
  const std::vector<Scalar>& breakpoints() const { return components_.front().breakpoints(); }
  const PiecewiseLinear<Scalar>& operator[](int i) const { return components_.at(i); }
  const std::vector<PiecewiseLinear<Scalar>>& components() const { return components_; }

  std::vector<Scalar> operator()(const Scalar& s) const {
    std::vector<Scalar> out;
    for (const auto& c : components_) out.push_back(c(s));
    return out;
  }

  /// The first i coordinates.
  PiecewiseLinearPath head(int i) const {
    return PiecewiseLinearPath(std::vector<PiecewiseLinear<Scalar>>(components_.begin(), components_.begin() + i));
  }

 private:
  std::vector<PiecewiseLinear<Scalar>> components_;
};

/// Γ(f) = (f_1 ⊲ ... ⊲ f_k, Γ(f_2 ⊳ f_1, f_3 ⊳ (f_1 ⊲ f_2), ...)).
template <class Scalar>
PiecewiseLinearPath<Scalar> gamma(const PiecewiseLinearPath<Scalar>& f) {
  std::vector<PiecewiseLinear<Scalar>> out;
  std::vector<PiecewiseLinear<Scalar>> level = f.components();
  while (level.size() > 1) {
    std::vector<PiecewiseLinear<Scalar>> next;
    PiecewiseLinear<Scalar> d = level.front();
    for (std::size_t i = 1; i < level.size(); ++i) {
      next.push_back(csup(level[i], d));
      d = cinf(d, level[i]);
    }
    out.push_back(d);
    level = std::move(next);
  }
  out.push_back(level.front());
  return PiecewiseLinearPath<Scalar>(std::move(out));
}

/// f_k ⊳ f_{k-1} ⊳ ... ⊳ f_1.
template <class Scalar>
PiecewiseLinear<Scalar> csup_fold(const PiecewiseLinearPath<Scalar>& f) {
  PiecewiseLinear<Scalar> acc = f[f.k() - 1];
  for (int i = f.k() - 2; i >= 0; --i) acc = csup(acc, f[i]);
  return acc;
}

/// Interlacing array: rows[i-1] = x^(i) with i entries.
template <class Scalar>
struct GelfandCetlinPoint {
  std::vector<std::vector<Scalar>> rows;

  /// x^(i)_j >= x^(i-1)_j >= x^(i)_{j+1}.
  bool interlaced() const {
    for (std::size_t i = 1; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i - 1].size(); ++j) {
        if (rows[i][j] < rows[i - 1][j] || rows[i - 1][j] < rows[i][j + 1]) return false;
      }
    }
    return true;
  }
};

template <class Scalar>
void require_unit_horizon(const PiecewiseLinearPath<Scalar>& f) {
  if (f.horizon() != 1) throw DomainError("path must be defined on [0, 1]; rescale it first");
}

/// x^(i) = (Γ^(i)_i, ..., Γ^(i)_1)(f_1, ..., f_i) at time 1.
template <class Scalar>
GelfandCetlinPoint<Scalar> gc_phi(const PiecewiseLinearPath<Scalar>& f) {
  require_unit_horizon(f);
  GelfandCetlinPoint<Scalar> x;
  for (int i = 1; i <= f.k(); ++i) {
    auto end = gamma(f.head(i))(Scalar(1));
    std::reverse(end.begin(), end.end());
    x.rows.push_back(std::move(end));
  }
  if (!x.interlaced()) throw std::logic_error("Gelfand-Cetlin interlacing violated");
  return x;
}

/// The recording path t -> Γ(f)(t) on [0, 1].
template <class Scalar>
PiecewiseLinearPath<Scalar> gc_rho(const PiecewiseLinearPath<Scalar>& f) {
  require_unit_horizon(f);
  return gamma(f);
}

/// g(s) = f(s * horizon) on [0, 1].
template <class Scalar>
PiecewiseLinearPath<Scalar> rescale_to_unit(const PiecewiseLinearPath<Scalar>& f) {
  const Scalar h = f.horizon();
  std::vector<Scalar> t;
  for (const auto& s : f.breakpoints()) t.push_back(s / h);
  std::vector<std::vector<Scalar>> v;
  for (const auto& c : f.components()) v.push_back(c.values());
  return PiecewiseLinearPath<Scalar>(std::move(t), std::move(v));
}

/// Both sides of max(sup_s[sup_{r<=s} u(r) + v(s)], sup_s[u(s) + sup_{r<=s} v(r)]) = sup u + sup v.
template <class Scalar>
std::pair<Scalar, Scalar> sup_integration_by_parts(const PiecewiseLinear<Scalar>& u, const PiecewiseLinear<Scalar>& v) {
  const Scalar left = std::max((running_max(u) + v).max_value(), (u + running_max(v)).max_value());
  return {left, u.max_value() + v.max_value()};
}

/// Linear interpolation of a lattice path, breakpoints at 0, 1, ..., N.
PiecewiseLinearPath<Rational> interpolate(const MultiPath& x);
/// Values of a Rational path at integer times 0..N, if they are integers.
MultiPath sample_integer_times(const PiecewiseLinearPath<Rational>& f);

/// {"k": int, "breakpoints": [..], "values": [[..] per coordinate]}; numbers
/// may be JSON numbers (read exactly) or "a/b" strings.
PiecewiseLinearPath<Rational> continuous_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PiecewiseLinearPath<Rational>& f);
nlohmann::json to_json(const GelfandCetlinPoint<Rational>& x);

}  // namespace rspath
