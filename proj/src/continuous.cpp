#include "rspath/continuous.hpp"

#include <string>

namespace rspath {

PiecewiseLinearPath<Rational> interpolate(const MultiPath& x) {
  std::vector<Rational> t;
  for (std::size_t n = 0; n <= x.horizon(); ++n) t.emplace_back(static_cast<long>(n));
  std::vector<std::vector<Rational>> v;
  for (const auto& c : x.components()) {
    std::vector<Rational> row;
    for (Value value : c.values()) row.emplace_back(static_cast<long>(value));
    v.push_back(std::move(row));
  }
  if (x.horizon() == 0) throw DomainError("cannot interpolate a path of horizon 0");
  return PiecewiseLinearPath<Rational>(std::move(t), std::move(v));
}

MultiPath sample_integer_times(const PiecewiseLinearPath<Rational>& f) {
  const Rational& h = f.horizon();
  if (denominator(h) != 1) throw DomainError("horizon is not an integer");
  const auto horizon = numerator(h).convert_to<long>();
  std::vector<Path> components;
  for (const auto& c : f.components()) {
    std::vector<Value> values;
    for (long n = 0; n <= horizon; ++n) {
      const Rational y = c(Rational(n));
      if (denominator(y) != 1) throw DomainError("value at integer time is not an integer");
      values.push_back(numerator(y).convert_to<Value>());
    }
    components.emplace_back(std::move(values));
  }
  return MultiPath(std::move(components));
}

namespace {

Rational scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return from_double(j.get<double>());
  throw DomainError("expected a number or \"a/b\" string");
}

}  // namespace

PiecewiseLinearPath<Rational> continuous_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
    throw DomainError("continuous path needs \"breakpoints\" and \"values\"");
  }
  std::vector<Rational> t;
  for (const auto& e : j.at("breakpoints")) t.push_back(scalar_from_json(e));
  std::vector<std::vector<Rational>> v;
  for (const auto& row : j.at("values")) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(scalar_from_json(e));
    v.push_back(std::move(r));
  }
  if (j.contains("k") && j.at("k").get<int>() != static_cast<int>(v.size())) {
    throw DomainError("\"k\" does not match the number of value rows");
  }
  return PiecewiseLinearPath<Rational>(std::move(t), std::move(v));
}

nlohmann::json to_json(const PiecewiseLinearPath<Rational>& f) {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& s : f.breakpoints()) t.push_back(to_wire(s));
  nlohmann::json v = nlohmann::json::array();
  for (const auto& c : f.components()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& y : c.values()) row.push_back(to_wire(y));
    v.push_back(std::move(row));
  }
  return {{"k", f.k()}, {"breakpoints", std::move(t)}, {"values", std::move(v)}};
}

nlohmann::json to_json(const GelfandCetlinPoint<Rational>& x) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : x.rows) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& y : r) row.push_back(to_wire(y));
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

}  // namespace rspath
