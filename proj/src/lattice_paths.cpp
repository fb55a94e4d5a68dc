#include "rspath/lattice_paths.hpp"

#include <algorithm>
#include <limits>

namespace rspath {

namespace {

constexpr Value kMaxHorizon = 1'000'000;

void require_same_horizon(const Path& x, const Path& y) {
  if (x.horizon() != y.horizon()) throw DomainError("paths have different horizons");
}

}  // namespace

Path::Path(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("path needs at least the value at time 0");
  if (values_.front() != 0) throw DomainError("path must start at 0");
  if (static_cast<Value>(values_.size()) > kMaxHorizon + 1) throw DomainError("horizon too large");
  for (std::size_t n = 1; n < values_.size(); ++n) {
    Value s = values_[n] - values_[n - 1];
    if (s != 0 && s != 1) throw DomainError("path steps must be 0 or 1");
  }
}

Path Path::from_steps(std::span<const int> steps) {
  std::vector<Value> v(steps.size() + 1, 0);
  for (std::size_t n = 0; n < steps.size(); ++n) v[n + 1] = v[n] + steps[n];
  return Path(std::move(v));
}

Value Path::at(std::size_t n) const {
  if (n > horizon()) throw DomainError("time beyond horizon");
  return values_[n];
}

MultiPath::MultiPath(std::vector<Path> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.horizon() != components_.front().horizon())
      throw DomainError("multipath components have different horizons");
  }
}

std::vector<Value> MultiPath::at(std::size_t n) const {
  std::vector<Value> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.at(n));
  return out;
}

Value MultiPath::total(std::size_t n) const {
  Value s = 0;
  for (const auto& c : components_) s += c.at(n);
  return s;
}

bool MultiPath::in_pi() const {
  for (std::size_t n = 1; n <= horizon(); ++n) {
    int moved = 0;
    for (const auto& c : components_) moved += c.step(n);
    if (moved != 1) return false;
  }
  return true;
}

bool MultiPath::in_lambda() const {
  for (std::size_t n = 1; n <= horizon(); ++n) {
    int moved = 0;
    for (const auto& c : components_) moved += c.step(n);
    if (moved > 1) return false;
  }
  return true;
}

bool MultiPath::in_weyl_chamber() const {
  for (std::size_t n = 0; n <= horizon(); ++n) {
    for (std::size_t i = 1; i < components_.size(); ++i) {
      if (components_[i - 1](n) > components_[i](n)) return false;
    }
  }
  return true;
}

MultiPath MultiPath::prefix(std::size_t n) const {
  if (n > horizon()) throw DomainError("prefix beyond horizon");
  std::vector<Path> parts;
  for (const auto& c : components_) {
    parts.emplace_back(std::vector<Value>(c.values().begin(), c.values().begin() + n + 1));
  }
  return MultiPath(std::move(parts));
}

Word::Word(std::vector<int> letters, int k) : letters_(std::move(letters)), k_(k) {
  if (k < 1) throw DomainError("alphabet size must be positive");
  for (int a : letters_) {
    if (a < 1 || a > k) {
      throw DomainError("letter " + std::to_string(a) + " outside alphabet 1.." + std::to_string(k));
    }
  }
}

Word Word::parse(std::string_view digits, int k) {
  std::vector<int> letters;
  for (char c : digits) {
    if (c < '0' || c > '9') throw DomainError(std::string("not a digit: ") + c);
    letters.push_back(c - '0');
  }
  return Word(std::move(letters), k);
}

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<int>(letters_.begin(), letters_.begin() + std::min(n, letters_.size())), k_);
}

Word Word::reversed() const { return Word(std::vector<int>(letters_.rbegin(), letters_.rend()), k_); }

std::string Word::to_string() const {
  std::string s;
  for (int a : letters_) s += std::to_string(a);
  return s;
}

MultiPath lambda_walk(std::span<const int> letters, int k) {
  std::vector<std::vector<Value>> v(k, std::vector<Value>(letters.size() + 1, 0));
  for (std::size_t n = 0; n < letters.size(); ++n) {
    int a = letters[n];
    if (a < 0 || a > k) throw DomainError("letter outside 0..k");
    for (int i = 0; i < k; ++i) v[i][n + 1] = v[i][n] + (a == i + 1 ? 1 : 0);
  }
  std::vector<Path> parts;
  for (auto& c : v) parts.emplace_back(std::move(c));
  return MultiPath(std::move(parts));
}

MultiPath word_to_walk(const Word& w) { return lambda_walk(w.letters(), w.k()); }

Word walk_to_word(const MultiPath& x) {
  if (!x.in_pi()) throw DomainError("walk is not in Pi_k");
  std::vector<int> letters;
  for (std::size_t n = 1; n <= x.horizon(); ++n) {
    for (int i = 0; i < x.k(); ++i) {
      if (x[i].step(n) == 1) letters.push_back(i + 1);
    }
  }
  return Word(std::move(letters), x.k());
}

Path inf_conv(const Path& x, const Path& y) {
  require_same_horizon(x, y);
  std::vector<Value> out(x.horizon() + 1);
  Value running = std::numeric_limits<Value>::max();
  for (std::size_t n = 0; n <= x.horizon(); ++n) {
    running = std::min(running, x(n) - y(n));
    out[n] = y(n) + running;
  }
  return Path(std::move(out));
}

Path sup_conv(const Path& x, const Path& y) {
  require_same_horizon(x, y);
  std::vector<Value> out(x.horizon() + 1);
  Value running = std::numeric_limits<Value>::min();
  for (std::size_t n = 0; n <= x.horizon(); ++n) {
    running = std::max(running, x(n) - y(n));
    out[n] = y(n) + running;
  }
  return Path(std::move(out));
}

Sequence queue_length(const Path& x, const Path& y) {
  require_same_horizon(x, y);
  Sequence q(x.horizon() + 1, 0);
  for (std::size_t n = 1; n <= x.horizon(); ++n) {
    q[n] = std::max<Value>(q[n - 1] + x.step(n) - y.step(n), 0);
  }
  return q;
}

Value increments(const Path& x, std::size_t n, std::size_t l) {
  if (n > l) throw DomainError("increment needs n <= l");
  return x.at(l) - x.at(n);
}

WindowMax future_max_difference(const Path& d, const Path& t, std::size_t n) {
  require_same_horizon(d, t);
  if (n > d.horizon()) throw DomainError("time beyond horizon");
  WindowMax best{0, n};
  for (std::size_t l = n; l <= d.horizon(); ++l) {
    Value v = (d(l) - d(n)) - (t(l) - t(n));
    if (v > best.value) best = {v, l};
  }
  return best;
}

Sequence add(const Path& a, const Path& b) {
  require_same_horizon(a, b);
  Sequence s(a.horizon() + 1);
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = a(n) + b(n);
  return s;
}

Sequence subtract(const Path& a, const Path& b) {
  require_same_horizon(a, b);
  Sequence s(a.horizon() + 1);
  for (std::size_t n = 0; n < s.size(); ++n) s[n] = a(n) - b(n);
  return s;
}

MultiPath multipath_from_json(const nlohmann::json& j) {
  if (j.contains("components")) {
    std::vector<Path> comps;
    for (const auto& c : j.at("components")) comps.emplace_back(c.get<std::vector<Value>>());
    MultiPath x(std::move(comps));
    if (j.contains("k") && j.at("k").get<int>() != x.k()) throw DomainError("k does not match the components");
    return x;
  }
  if (!j.contains("k") || !j.contains("steps")) throw DomainError("expected {\"k\":..,\"steps\":[..]}");
  int k = j.at("k").get<int>();
  return word_to_walk(Word(j.at("steps").get<std::vector<int>>(), k));
}

Path path_from_json(const nlohmann::json& j) {
  if (!j.contains("values")) throw DomainError("expected {\"values\":[..]}");
  return Path(j.at("values").get<std::vector<Value>>());
}

nlohmann::json to_json(const Path& x) { return {{"values", x.values()}}; }

nlohmann::json to_json(const MultiPath& x) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : x.components()) comps.push_back(c.values());
  return {{"k", x.k()}, {"components", comps}};
}

}  // namespace rspath
