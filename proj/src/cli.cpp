#include "rspath/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rspath/continuous.hpp"
#include "rspath/markov.hpp"
#include "rspath/queueing.hpp"
#include "rspath/suites.hpp"
#include "rspath/tableaux.hpp"
#include "rspath/transform.hpp"

namespace rspath {

namespace {

using nlohmann::json;

std::string rows_string(const Tableau& t) {
  if (t.empty()) return "[]";
  std::string s = t.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if (s[i] == ']' && i + 1 < s.size()) out += ',';
  }
  return out;
}

template <class Row>
std::string list_string(const Row& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + std::to_string(row[i]);
  return out + "]";
}

std::string array_string(const ArrayRows& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? "," : "") + list_string(rows[i]);
  return out + "]";
}

std::vector<Value> parse_values(const std::string& text) {
  std::vector<Value> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("'" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

json simulation_json(double value, double stderr_value) { return {{"value", value}, {"stderr", stderr_value}}; }

double binomial_stderr(double p, std::size_t runs) { return std::sqrt(p * (1 - p) / static_cast<double>(runs)); }

int rsk(const RunConfig& c, std::ostream& out) {
  const Word w = Word::parse(c.word, c.k);
  InsertionMode mode;
  if (c.mode == "column") {
    mode = InsertionMode::Column;
  } else if (c.mode == "row") {
    mode = InsertionMode::Row;
  } else {
    throw DomainError("mode must be column or row");
  }
  std::vector<Tableau> sequence;
  Tableau p;
  for (std::size_t n = 0; n < w.size(); ++n) {
    p = mode == InsertionMode::Column ? column_insert(p, w[n]) : row_insert(p, w[n]);
    sequence.push_back(p);
  }
  const RSResult result = rs(w, mode);
  const std::vector<Partition> shapes = w.size() ? recording_shapes(result.q) : std::vector<Partition>{};
  const std::string emit = c.emit.empty() ? "tableaux" : c.emit;
  if (emit != "tableaux" && emit != "shapes" && emit != "json") throw DomainError("emit must be tableaux, shapes or json");

  if (c.json || emit == "json") {
    json seq = json::array(), chain = json::array();
    for (const auto& t : sequence) seq.push_back(to_json(t));
    for (const auto& s : shapes) chain.push_back(s.parts());
    out << json{{"word", w.to_string()}, {"k", w.k()},           {"mode", c.mode},
                {"p", to_json(result.p)},  {"q", to_json(result.q)}, {"sequence", seq},
                {"shapes", chain}}
               .dump()
        << '\n';
    return kExitOk;
  }
  if (emit == "shapes") {
    for (std::size_t n = 0; n < shapes.size(); ++n) out << "n=" << n + 1 << "  " << shapes[n].to_string() << '\n';
    return kExitOk;
  }
  for (std::size_t n = 0; n < sequence.size(); ++n) out << "n=" << n + 1 << "  " << rows_string(sequence[n]) << '\n';
  out << "P  " << rows_string(result.p) << '\n' << "Q  " << rows_string(result.q) << '\n';
  return kExitOk;
}

int transform_cmd(const RunConfig& c, std::ostream& out) {
  const Word w = Word::parse(c.word, c.k);
  const std::string emit = c.emit.empty() ? "all" : c.emit;
  if (emit != "g" && emit != "array" && emit != "all") throw DomainError("emit must be g, array or all");
  const MultiPath x = word_to_walk(w);
  const MultiPath g = gmap(x);
  const TriangularArray array = triangular(x);

  if (c.json) {
    json gj = json::array(), aj = json::array(), qj = json::array();
    for (std::size_t n = 0; n <= w.size(); ++n) {
      gj.push_back(g.at(n));
      aj.push_back(array.at(n));
      qj.push_back(array.queues_at(n));
    }
    json doc{{"word", w.to_string()}, {"k", w.k()}};
    if (emit != "array") doc["g"] = gj;
    if (emit != "g") {
      doc["array"] = aj;
      doc["queues"] = qj;
    }
    out << doc.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t n = 1; n <= w.size(); ++n) {
    out << "n=" << n << "  letter " << w[n - 1] << "  X " << list_string(x.at(n));
    if (emit != "g") out << "  D " << array_string(array.at(n)) << "  Q " << array_string(array.queues_at(n));
    if (emit != "array") out << "  G " << list_string(g.at(n));
    out << '\n';
  }
  return kExitOk;
}

int shape_dist(const RunConfig& c, std::ostream& out) {
  const RationalPoint p = parse_rational_list(c.p);
  require_positive_distribution(p);
  const int k = static_cast<int>(p.size());
  if (c.k != 0 && c.k != k) throw DomainError("--k does not match the length of --p");
  if (c.n < 0) throw DomainError("n must be non-negative");

  if (c.exact || c.check) {
    const ShapeDistribution dist = exact_shape_dist(p, c.n);
    if (c.json) {
      json doc = json::object();
      for (const auto& [shape, probability] : dist.formula) doc[shape.to_string()] = to_wire(probability);
      out << doc.dump() << '\n';
    } else {
      for (const auto& [shape, probability] : dist.formula) {
        out << std::left << std::setw(16) << shape.to_string() << std::setw(24) << to_wire(probability)
            << to_double(probability) << '\n';
      }
    }
    if (c.check) {
      if (!c.json) out << (dist.consistent() ? "formula, Q-chain and enumeration agree" : "MISMATCH") << '\n';
      if (!dist.consistent()) return kExitVerification;
    }
    return kExitOk;
  }

  if (c.runs == 0) throw DomainError("runs must be positive");
  const LetterSampler sampler(p);
  Rng rng(c.seed, 0);
  std::map<Partition, std::size_t> counts;
  for (std::size_t r = 0; r < c.runs; ++r) {
    const auto g = sample_g_endpoint(sampler, static_cast<std::size_t>(c.n), rng);
    ++counts[Partition::from_weyl(g)];
  }
  json doc = json::object();
  for (const auto& [shape, count] : counts) {
    const double f = static_cast<double>(count) / static_cast<double>(c.runs);
    if (c.json) {
      doc[shape.to_string()] = simulation_json(f, binomial_stderr(f, c.runs));
    } else {
      out << std::left << std::setw(16) << shape.to_string() << f << " ± " << binomial_stderr(f, c.runs) << '\n';
    }
  }
  if (c.json) out << doc.dump() << '\n';
  return kExitOk;
}

int tandem(const RunConfig& c, std::ostream& out) {
  const PoissonDrive drive(parse_rational_list(c.mu));
  if (!(c.t >= 0)) throw DomainError("t must be non-negative");
  const std::string emit = c.emit.empty() ? "both" : c.emit;
  if (emit != "empirical" && emit != "formula" && emit != "both") {
    throw DomainError("emit must be empirical, formula or both");
  }
  const bool empirical = emit != "formula";
  const bool formula = emit != "empirical";
  std::optional<DepartureVector> d;
  if (!c.departures.empty()) {
    d = parse_values(c.departures);
    if (static_cast<int>(d->size()) != drive.k()) throw DomainError("--d needs one entry per station");
  }
  if (c.queue >= 0 && drive.k() != 2) throw DomainError("--queue is available for two stations only");
  if (formula && !d && c.queue < 0 && !empirical) throw DomainError("formula output needs --d or --queue");
  if (empirical && c.runs == 0) throw DomainError("runs must be positive");

  std::map<DepartureVector, std::size_t> counts;
  std::map<Value, std::size_t> queue_counts;
  if (empirical) {
    Rng rng(c.seed, 0);
    for (std::size_t r = 0; r < c.runs; ++r) {
      const PoissonSample s = simulate_poisson(drive, c.t, rng);
      ++counts[s.departures];
      if (!s.queues.empty()) ++queue_counts[s.queues.front()];
    }
  }
  auto frequency = [&](std::size_t count) { return static_cast<double>(count) / static_cast<double>(c.runs); };

  auto entry_for = [&](const DepartureVector& dv) {
    json e{{"d", dv}};
    if (empirical) {
      const auto it = counts.find(dv);
      const double f = frequency(it == counts.end() ? 0 : it->second);
      e["empirical"] = simulation_json(f, binomial_stderr(f, c.runs));
    }
    if (formula) {
      const SeriesValue s = transient_dist(drive, c.t, dv, c.tolerance);
      e["formula"] = {{"value", s.value}, {"tail_bound", s.tail_bound}, {"terms", s.terms}};
      if (drive.k() == 2) e["closed_form"] = transient_k2(drive, c.t, dv);
    }
    return e;
  };

  json doc{{"mu", json::array()}, {"t", c.t}};
  for (const auto& m : drive.mu()) doc["mu"].push_back(to_wire(m));
  if (empirical) doc["runs"] = c.runs;
  json entries = json::array();
  if (d) {
    entries.push_back(entry_for(*d));
  } else if (c.queue < 0) {
    std::vector<std::pair<std::size_t, DepartureVector>> ranked;
    for (const auto& [dv, count] : counts) ranked.emplace_back(count, dv);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    if (ranked.size() > 10) ranked.resize(10);
    for (const auto& [count, dv] : ranked) entries.push_back(entry_for(dv));
  }
  if (!entries.empty()) doc["departures"] = entries;
  if (c.queue >= 0) {
    json q{{"q", c.queue}};
    if (empirical) {
      const auto it = queue_counts.find(c.queue);
      const double f = frequency(it == queue_counts.end() ? 0 : it->second);
      q["empirical"] = simulation_json(f, binomial_stderr(f, c.runs));
    }
    if (formula) q["formula"] = queuelen_k2(drive, c.t, c.queue);
    doc["queue"] = q;
  }

  if (c.json) {
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << std::setprecision(10);
  for (const auto& e : entries) {
    out << "D(t)=" << list_string(e["d"].get<std::vector<Value>>());
    if (e.contains("empirical")) {
      out << "  empirical " << e["empirical"]["value"].get<double>() << " ± " << e["empirical"]["stderr"].get<double>();
    }
    if (e.contains("formula")) {
      out << "  series " << e["formula"]["value"].get<double>() << " (tail <= " << e["formula"]["tail_bound"].get<double>()
          << ")";
    }
    if (e.contains("closed_form")) out << "  closed form " << e["closed_form"].get<double>();
    out << '\n';
  }
  if (doc.contains("queue")) {
    const json& q = doc["queue"];
    out << "Q(t)=" << c.queue;
    if (q.contains("empirical")) {
      out << "  empirical " << q["empirical"]["value"].get<double>() << " ± " << q["empirical"]["stderr"].get<double>();
    }
    if (q.contains("formula")) out << "  Bessel series " << q["formula"].get<double>();
    out << '\n';
  }
  return kExitOk;
}

json read_json_input(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

void print_path(const PiecewiseLinearPath<Rational>& f, std::ostream& out) {
  for (const auto& s : f.breakpoints()) {
    out << std::left << std::setw(12) << to_wire(s);
    for (const auto& v : f(s)) out << ' ' << std::setw(12) << to_wire(v);
    out << '\n';
  }
}

int continuous_cmd(const RunConfig& c, std::ostream& out) {
  if (c.input.empty()) throw DomainError("--input is required");
  PiecewiseLinearPath<Rational> f = continuous_from_json(read_json_input(c.input));
  if (c.rescale) f = rescale_to_unit(f);
  if (c.op == "gamma" || c.op == "rho") {
    const auto g = c.op == "gamma" ? gamma(f) : gc_rho(f);
    if (c.json) {
      out << to_json(g).dump() << '\n';
    } else {
      print_path(g, out);
    }
    return kExitOk;
  }
  if (c.op == "phi") {
    const auto x = gc_phi(f);
    if (c.json) {
      out << to_json(x).dump() << '\n';
    } else {
      for (const auto& row : x.rows) {
        for (const auto& v : row) out << to_wire(v) << ' ';
        out << '\n';
      }
    }
    return kExitOk;
  }
  throw DomainError("op must be gamma, phi or rho");
}

int default_bound(const std::string& suite, int k) {
  if (suite == "theorem31" || suite == "greene" || suite == "continuous") return 8;
  if (suite == "lemmas") return 10;
  if (suite == "intertwining" || suite == "shapechain") return k <= 2 ? 8 : 6;
  return 6;
}

int verify(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(c.suite);
  }
  SuiteOptions options;
  options.k = c.k == 0 ? 3 : c.k;
  options.seed = c.seed;
  options.samples = c.samples;
  if (!c.p.empty()) {
    options.distributions.push_back(parse_rational_list(c.p));
    if (static_cast<int>(options.distributions.front().size()) != options.k) {
      throw DomainError("--p must have k entries");
    }
  }
  bool all = true;
  json report = json::array();
  for (const auto& name : names) {
    options.max_n = c.max_n >= 0 ? c.max_n : default_bound(name, options.k);
    const SuiteResult r = run_suite(name, options);
    all = all && r.passed();
    report.push_back({{"name", r.name},
                      {"passed", r.passed()},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"witnesses", r.witnesses}});
    if (!c.json) {
      out << std::left << std::setw(14) << r.name << (r.passed() ? "PASS" : "FAIL") << "  cases=" << r.cases
          << " failures=" << r.failures << " k=" << options.k << " max_n=" << options.max_n << '\n';
      for (const auto& w : r.witnesses) out << "  " << w << '\n';
    }
  }
  if (c.json) out << json{{"suites", report}, {"passed", all}}.dump() << '\n';
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "rsk") return rsk(config, out);
    if (config.subcommand == "transform") return transform_cmd(config, out);
    if (config.subcommand == "shape-dist") return shape_dist(config, out);
    if (config.subcommand == "tandem") return tandem(config, out);
    if (config.subcommand == "continuous") return continuous_cmd(config, out);
    if (config.subcommand == "verify") return verify(config, out);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Path transformations, Robinson-Schensted insertion and tandem queues"};
  app.name("rspath");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", c.json, "Machine-readable output");
  app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app.add_option("--tolerance", c.tolerance, "Truncation tolerance for series")->capture_default_str();

  auto* rsk_cmd = app.add_subcommand("rsk", "Robinson-Schensted insertion of a word");
  rsk_cmd->add_option("--word", c.word, "Word as a digit string")->required();
  rsk_cmd->add_option("--k", c.k, "Alphabet size")->required()->check(CLI::Range(1, 9));
  rsk_cmd->add_option("--mode", c.mode, "column or row")->capture_default_str();
  rsk_cmd->add_option("--emit", c.emit, "tableaux, shapes or json");

  auto* transform_sub = app.add_subcommand("transform", "Path transformation G and the triangular array");
  transform_sub->add_option("--word", c.word, "Word as a digit string")->required();
  transform_sub->add_option("--k", c.k, "Alphabet size")->required()->check(CLI::Range(1, 9));
  transform_sub->add_option("--emit", c.emit, "g, array or all");

  auto* shape_sub = app.add_subcommand("shape-dist", "Law of the shape after n letters");
  shape_sub->add_option("--p", c.p, "Letter probabilities, e.g. 1/3,2/3")->required();
  shape_sub->add_option("--k", c.k, "Alphabet size (defaults to the length of --p)");
  shape_sub->add_option("--n", c.n, "Number of letters")->required();
  shape_sub->add_flag("--exact", c.exact, "Exact rational law (otherwise Monte Carlo)");
  shape_sub->add_flag("--check", c.check, "Check formula, Q-chain and enumeration agree");
  shape_sub->add_option("--runs", c.runs, "Monte Carlo sample size")->capture_default_str();

  auto* tandem_sub = app.add_subcommand("tandem", "Poisson-driven tandem queues at time t");
  tandem_sub->add_option("--mu", c.mu, "Service rates, e.g. 1,1,2")->required();
  tandem_sub->add_option("--t", c.t, "Time")->required();
  tandem_sub->add_option("--runs", c.runs, "Monte Carlo sample size")->capture_default_str();
  tandem_sub->add_option("--emit", c.emit, "empirical, formula or both");
  tandem_sub->add_option("--d", c.departures, "Departure vector, e.g. 2,1,0");
  tandem_sub->add_option("--queue", c.queue, "Queue length at the second station (two stations)");

  auto* continuous_sub = app.add_subcommand("continuous", "Continuous transformations of a piecewise-linear path");
  continuous_sub->add_option("--input", c.input, "Path JSON file, or - for stdin")->required();
  continuous_sub->add_option("--op", c.op, "gamma, phi or rho")->capture_default_str();
  continuous_sub->add_flag("--rescale", c.rescale, "Rescale the time axis to [0, 1] first");

  auto* verify_sub = app.add_subcommand("verify", "Run verification suites");
  verify_sub->add_option("--suite", c.suite, "Suite name or all")->required();
  verify_sub->add_option("--k", c.k, "Alphabet size (default 3)");
  verify_sub->add_option("--max-n,--max-size", c.max_n, "Word length or size bound");
  verify_sub->add_option("--p", c.p, "Letter probabilities (default: a built-in set)");
  verify_sub->add_option("--samples", c.samples, "Random instances")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return run(c, out, err);
}

}  // namespace rspath
