#include "rspath/symfunc.hpp"

#include <functional>

namespace rspath {

namespace {

std::vector<int> strip(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// μ with λ/μ a horizontal strip (λ_{i+1} <= μ_i <= λ_i) and μ ⊇ floor.
void for_each_inner(const std::vector<int>& lambda, const std::vector<int>& floor,
                    const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> mu(lambda.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int removed) {
    if (i == lambda.size()) {
      visit(mu, removed);
      return;
    }
    int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    if (i < floor.size()) lo = std::max(lo, floor[i]);
    for (int v = lambda[i]; v >= lo; --v) {
      mu[i] = v;
      rec(i + 1, removed + lambda[i] - v);
    }
  };
  rec(0, 0);
}

Rational skew_rec(const std::vector<int>& lambda, const std::vector<int>& d, const RationalPoint& x,
                  std::size_t m, std::map<std::pair<std::vector<int>, std::size_t>, Rational>& memo) {
  if (m == 0) return lambda == d ? Rational(1) : Rational(0);
  auto key = std::make_pair(lambda, m);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rational sum = 0;
  for_each_inner(lambda, d, [&](const std::vector<int>& mu, int removed) {
    Rational inner = skew_rec(strip(mu), d, x, m - 1, memo);
    if (inner != 0) sum += inner * ipow(x[m - 1], removed);
  });
  memo.emplace(std::move(key), sum);
  return sum;
}

}  // namespace

Rational skew_schur(const Partition& lambda, const Partition& d, const RationalPoint& x) {
  if (!lambda.contains(d)) throw DomainError("skew shape needs d contained in lambda");
  std::map<std::pair<std::vector<int>, std::size_t>, Rational> memo;
  return skew_rec(strip(lambda.parts()), strip(d.parts()), x, x.size(), memo);
}

Rational schur(const Partition& lambda, const RationalPoint& x) {
  if (lambda.length() > static_cast<int>(x.size())) return 0;
  return skew_schur(lambda, Partition(), x);
}

Rational schur_bialternant(const Partition& lambda, const RationalPoint& x) {
  const int k = static_cast<int>(x.size());
  if (lambda.length() > k) return 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (x[i] == x[j]) throw DomainError("bialternant needs pairwise distinct coordinates");
    }
  }
  const auto l = lambda.padded(k);
  RationalMatrix num(k, k), den(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      num(i, j) = ipow(x[i], l[j] + k - 1 - j);
      den(i, j) = ipow(x[i], k - 1 - j);
    }
  }
  return Rational(num.determinant() / den.determinant());
}

Rational harmonic_h(const RationalPoint& p, const RationalPoint& r, std::span<const Value> x) {
  if (p.size() != x.size() || r.size() != x.size()) throw DomainError("dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) return 0;
    if (i > 0 && x[i - 1] > x[i]) return 0;
  }
  Rational weight = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (p[i] == 0) throw DomainError("zero p_i with non-zero exponent");
    weight /= ipow(p[i], x[i]);
  }
  return weight * schur(Partition::from_weyl(x), r);
}

Rational SchurTable::operator()(const Partition& lambda) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(lambda); it != cache_.end()) return it->second;
  }
  Rational value = schur(lambda, x_);
  std::lock_guard lock(mutex_);
  return cache_.emplace(lambda, value).first->second;
}

}  // namespace rspath
