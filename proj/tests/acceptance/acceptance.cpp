// One PASS/FAIL line per acceptance criterion. Exit status is 0 only if every
// criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rspath/markov.hpp"
#include "rspath/queueing.hpp"
#include "rspath/suites.hpp"
#include "rspath/tableaux.hpp"
#include "rspath/transform.hpp"

using namespace rspath;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool passed = false;
  std::string detail;
};

Rational r(long a, long b = 1) { return Rational(a, b); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const SuiteResult& s) {
  std::ostringstream out;
  out << s.name << " cases=" << s.cases << " failures=" << s.failures;
  if (!s.witnesses.empty()) out << " first: " << s.witnesses.front();
  return out.str();
}

// Runs the suite for every listed k and each drift vector, merging counts.
SuiteResult run_all(const std::string& name, const std::vector<SuiteOptions>& runs) {
  SuiteResult total(name);
  for (const SuiteOptions& o : runs) {
    const SuiteResult s = run_suite(name, o);
    total.cases += s.cases;
    total.failures += s.failures;
    for (const auto& w : s.witnesses) total.witnesses.push_back(w);
  }
  return total;
}

SuiteOptions options(int k, int max_n, std::vector<RationalPoint> distributions = {}) {
  SuiteOptions o;
  o.k = k;
  o.max_n = max_n;
  o.distributions = std::move(distributions);
  return o;
}

Verdict criterion1() {
  const Word w = Word::parse(fixtures::kWord, 3);
  const auto start = Clock::now();
  const TriangularArray folded = triangular(word_to_walk(w));
  const TriangularArray incremental = triangular_incremental(w);
  const auto snapshots = simulate_word(w);
  std::vector<Tableau> tableaux;
  Tableau p;
  for (std::size_t n = 1; n <= w.size(); ++n) tableaux.push_back(p = column_insert(p, w[n - 1]));
  const double elapsed = seconds_since(start);

  int matched = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    const bool ok = folded.at(n) == fixtures::kDepartures[n - 1] && incremental.at(n) == fixtures::kDepartures[n - 1] &&
                    snapshots[n].departures == fixtures::kDepartures[n - 1] &&
                    folded.queues_at(n) == fixtures::kQueues[n - 1] &&
                    snapshots[n].queues == fixtures::kQueues[n - 1] &&
                    tableaux[n - 1].rows() == fixtures::kTableaux[n - 1] &&
                    tableau_from_array(folded, n) == tableaux[n - 1];
    matched += ok ? 1 : 0;
  }
  std::ostringstream out;
  out << matched << "/7 fixtures, " << elapsed * 1e3 << " ms";
  return {matched == 7 && elapsed < 1e-3, out.str()};
}

Verdict criterion2() {
  const auto start = Clock::now();
  const SuiteResult s = run_suite("theorem31", options(4, 8));
  const double elapsed = seconds_since(start);
  return {s.passed() && elapsed < 60, describe(s) + ", " + std::to_string(elapsed) + " s"};
}

Verdict criterion3() {
  const auto start = Clock::now();
  SuiteResult s = run_suite("greene", options(3, 8));
  // independent subset-scan oracle for m_i
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 8; ++n) {
      for_each_word(k, n, [&](const Word& w) {
        const auto m = oracle::greene_numbers(w.letters(), k);
        const Partition shape = rs(w, InsertionMode::Column).p.shape();
        const std::vector<Value> g = gmap(word_to_walk(w)).at(w.size());
        int shape_sum = 0;
        Value g_sum = 0;
        bool ok = true;
        for (int i = 1; i <= k; ++i) {
          shape_sum += shape[i - 1];
          g_sum += g[k - i];
          ok = ok && m[i] == shape_sum && m[i] == g_sum;
        }
        s.check(ok, [&] { return "greene oracle mismatch on " + w.to_string(); });
      });
    }
  }
  const double elapsed = seconds_since(start);
  return {s.passed() && elapsed < 120, describe(s) + ", " + std::to_string(elapsed) + " s"};
}

Verdict criterion4() {
  const SuiteResult s = run_suite("lemmas", options(3, 10));
  return {s.passed(), describe(s)};
}

Verdict criterion5() {
  const SuiteResult s =
      run_all("shapechain", {options(2, 8, {{r(1, 2), r(1, 2)}, {r(1, 3), r(2, 3)}}),
                             options(3, 6, {{r(1, 6), r(1, 3), r(1, 2)}})});
  return {s.passed(), describe(s)};
}

Verdict criterion6() {
  const SuiteResult s =
      run_all("intertwining", {options(2, 8, {{r(1, 2), r(1, 2)}, {r(1, 3), r(2, 3)}}),
                               options(3, 6, {{r(1, 6), r(1, 3), r(1, 2)}})});
  return {s.passed(), describe(s)};
}

Verdict criterion7() {
  const SuiteResult s = run_all(
      "theorem11", {options(2, 6, {{r(1, 2), r(1, 2)}, {r(1, 3), r(2, 3)}, {r(2, 3), r(1, 3)}}),
                    options(3, 6, {{r(1, 6), r(1, 3), r(1, 2)}, {r(1, 2), r(1, 3), r(1, 6)}})});
  return {s.passed(), describe(s)};
}

Verdict criterion8() {
  const SuiteResult s = run_all("kernel", {options(2, 6, {{r(1, 2), r(1, 2)}, {r(2, 3), r(1, 3)}}),
                                           options(3, 6, {{r(1, 6), r(1, 3), r(1, 2)}})});
  return {s.passed(), describe(s)};
}

struct Estimate {
  double value, stderr_value;
};

Estimate proportion(std::size_t hits, std::size_t runs) {
  const double p = static_cast<double>(hits) / static_cast<double>(runs);
  return {p, std::sqrt(p * (1 - p) / static_cast<double>(runs))};
}

Verdict criterion9() {
  const auto start = Clock::now();
  std::ostringstream out;
  out.precision(6);
  bool all = true;

  // closed form vs Poisson mixture
  {
    const PoissonDrive drive({r(3, 10), r(7, 10)});
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> time(0.1, 4.0);
    std::uniform_int_distribution<int> count(0, 8);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const double t = time(gen);
      const Value d2 = count(gen), d1 = d2 + count(gen);
      worst = std::max(worst, std::abs(transient_k2(drive, t, {d1, d2}) - transient_dist(drive, t, {d1, d2}, 1e-12).value));
    }
    const bool ok = worst <= 1e-9;
    all = all && ok;
    out << "[k2 closed form " << (ok ? "ok" : "FAIL") << " max err " << worst << "] ";
  }

  const std::size_t runs = 100000;
  // queue length vs simulation
  {
    const PoissonDrive drive({r(3, 10), r(7, 10)});
    const double t = 1.5;
    Rng rng(20240601, 1);
    std::vector<std::size_t> hist(4, 0);
    for (std::size_t i = 0; i < runs; ++i) {
      const Value q = simulate_poisson(drive, t, rng).queues[0];
      if (q < 4) ++hist[q];
    }
    bool ok = true;
    double worst = 0;
    for (int q = 0; q < 4; ++q) {
      const Estimate e = proportion(hist[q], runs);
      const double z = std::abs(e.value - queuelen_k2(drive, t, q)) / e.stderr_value;
      worst = std::max(worst, z);
      ok = ok && z <= 3;
    }
    all = all && ok;
    out << "[queue length " << (ok ? "ok" : "FAIL") << " max |z| " << worst << "] ";
  }

  // k = 3 special case vs simulation of P(D1 = d1, D2 >= d2, D3 = d3)
  {
    const PoissonDrive drive({r(1, 2), r(1, 4), r(1, 4)});
    const double t = 1.0;
    const DepartureVector d{1, 1, 0};
    Rng rng(20240601, 2);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < runs; ++i) {
      const auto s = simulate_poisson(drive, t, rng).departures;
      if (s[0] == d[0] && s[1] >= d[1] && s[2] == d[2]) ++hits;
    }
    const Estimate e = proportion(hits, runs);
    const double formula = transient_k3_special(drive, t, d);
    const double exact = transient_event_k3(drive, t, d, 1e-12).value;
    const double z = std::abs(e.value - formula) / e.stderr_value;
    const double z_exact = std::abs(e.value - exact) / e.stderr_value;
    const bool ok = z <= 3;
    all = all && ok;
    out << "[k3 special " << (ok ? "ok" : "FAIL") << " formula " << formula << " mc " << e.value << " +- "
        << e.stderr_value << " |z| " << z << "; exact mixture " << exact << " |z| " << z_exact << "] ";
  }

  // combinatorial factor of the constant-departure formula
  {
    bool ok = true;
    for (int k = 1; k <= 8; ++k) {
      for (int m = 1; m <= 8; ++m) ok = ok && constant_factor_barnes(k, m) == constant_factor_hook(k, m);
    }
    all = all && ok;
    out << "[Barnes factor " << (ok ? "ok" : "FAIL") << "] ";
  }

  const double elapsed = seconds_since(start);
  out << elapsed << " s";
  return {all && elapsed < 120, out.str()};
}

Verdict criterion10() {
  const SurvivalReport rep = survival_ratio_check({r(1, 4), r(3, 4)}, {0, 0}, {0, 1}, 2000, 1000000, 20240601);
  std::ostringstream out;
  out.precision(6);
  out << "ratio " << rep.ratio << " +- " << rep.stderr_ratio << " target " << rep.target;
  return {rep.passed, out.str()};
}

Verdict criterion11() {
  SuiteOptions o = options(3, 8);
  o.samples = 200;
  const SuiteResult s = run_suite("continuous", o);
  return {s.passed(), describe(s)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"worked example", criterion1},    {"column insertion", criterion2}, {"Greene invariants", criterion3},
      {"lemma identities", criterion4},  {"shape chain law", criterion5},  {"intertwinings", criterion6},
      {"G chain law", criterion7},       {"conditional law", criterion8},  {"transient formulas", criterion9},
      {"survival ratio", criterion10},   {"continuous", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.passed ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", v.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
