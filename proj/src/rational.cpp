#include "rspath/rational.hpp"

#include <cmath>

namespace rspath {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw DomainError("empty number");
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) throw DomainError("malformed number: " + std::string(s));
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("malformed number: " + std::string(s));
  }
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator: " + std::string(text));
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    Integer w = whole.empty() || whole == "-" || whole == "+" ? Integer(0) : parse_integer(whole);
    Integer f = frac.empty() ? Integer(0) : parse_integer(frac);
    if (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))
      throw DomainError("malformed number: " + std::string(text));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational magnitude = Rational(boost::multiprecision::abs(w)) + Rational(f, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_integer(text));
}

RationalPoint parse_rational_list(std::string_view text) {
  RationalPoint out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string to_wire(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational result(scaled);
  exponent -= 53;
  if (exponent >= 0) {
    result *= ipow(Rational(2), exponent);
  } else {
    result /= ipow(Rational(2), -exponent);
  }
  return result;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

void require_positive_distribution(const RationalPoint& p) {
  if (p.empty()) throw DomainError("empty distribution");
  Rational total = 0;
  for (const auto& v : p) {
    if (v <= 0) throw DomainError("distribution entries must be strictly positive");
    total += v;
  }
  if (total != 1) throw DomainError("distribution must sum to 1, got " + to_wire(total));
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace rspath
