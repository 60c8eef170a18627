#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "udg/catalog.hpp"
#include "udg/constants.hpp"
#include "udg/decide.hpp"
#include "udg/errors.hpp"
#include "udg/gnp.hpp"
#include "udg/hex_coloring.hpp"
#include "udg/point_config.hpp"
#include "udg/report.hpp"
#include "udg/rng.hpp"
#include "udg/threshold.hpp"
#include "udg/u_regime.hpp"

namespace {

using nlohmann::json;
using namespace udg;

constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string config;
  std::string out;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open \"" + path + "\"");
  return in;
}

// Writes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidInput("cannot write \"" + path + "\"");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string config_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// Fills options left unset on the command line from a flat JSON object whose
// keys are long option names without dashes.
void apply_config(const std::string& path, CLI::App& app, CLI::App* sub) {
  json cfg;
  try {
    auto in = open_input(path);
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("config \"" + path + "\": " + e.what());
  }
  if (!cfg.is_object()) throw InvalidInput("config \"" + path + "\" must hold a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    if (key == "config") continue;
    CLI::Option* opt = sub != nullptr ? sub->get_option_no_throw("--" + key) : nullptr;
    if (opt == nullptr) opt = app.get_option_no_throw("--" + key);
    if (opt == nullptr) throw InvalidInput("config key \"" + key + "\" matches no option of this command");
    if (opt->count() > 0) continue;
    if (value.is_array()) {
      for (const auto& v : value) opt->add_result(config_value(v));
    } else {
      opt->add_result(config_value(value));
    }
    opt->run_callback();
  }
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

geom::PointConfig load_points(const std::string& path) {
  auto in = open_input(path);
  return geom::read_points(in);
}

harness::Decider make_decider(std::size_t d, std::size_t restarts) {
  return d == 1 ? harness::one_d_exact() : harness::pipeline(d, restarts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-graph realizability experiments: unit-distance and diameter graphs"};
  app.require_subcommand(1);
  Globals g;
  // Required unless supplied by --config; checked after the config is applied.
  std::vector<std::pair<const CLI::App*, const CLI::Option*>> needed;
  app.add_option("--seed", g.seed, "Master seed");
  app.add_option("--workers", g.workers, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  app.add_option("--config", g.config, "JSON object supplying values for options not given on the command line");
  app.add_option("--out", g.out, "Output file (default stdout)");

  // sample
  std::size_t s_n = 0;
  double s_p = 0.0;
  auto* sample = app.add_subcommand("sample", "Emit a G(n,p) graph file");
  needed.emplace_back(sample, sample->add_option("--n", s_n, "Vertex count"));
  needed.emplace_back(sample, sample->add_option("--p", s_p, "Edge probability"));

  // decide
  std::string d_graph;
  std::size_t d_dim = 2;
  std::size_t d_restarts = 50;
  bool d_oracle = false;
  auto* decide = app.add_subcommand("decide", "Realizability verdict for a graph file");
  decide->add_option("graph", d_graph, "Graph file")->required();
  decide->add_option("--dim", d_dim, "Dimension")->check(CLI::Range(1, 16));
  decide->add_option("--restarts", d_restarts, "Embedding restarts (d >= 2)");
  decide->add_flag("--oracle", d_oracle, "Use the backtracking oracle (d = 1, at most 12 vertices)");

  // threshold
  std::size_t t_n = 0;
  std::size_t t_dim = 1;
  harness::ThresholdOptions t_opts;
  std::size_t t_restarts = 50;
  std::string t_curve;
  auto* threshold = app.add_subcommand("threshold", "Bisection estimate of the realizability threshold");
  needed.emplace_back(threshold, threshold->add_option("--n", t_n, "Vertex count"));
  threshold->add_option("--dim", t_dim, "Dimension (1 uses the exact decider)")->check(CLI::Range(1, 16));
  threshold->add_option("--trials", t_opts.trials, "Trials per probe")->check(CLI::PositiveNumber);
  threshold->add_option("--tol", t_opts.tol, "Relative bracket width at which bisection stops");
  threshold->add_option("--growth", t_opts.max_growth, "Trial multiple allowed for ambiguous probes");
  threshold->add_option("--restarts", t_restarts, "Embedding restarts (d >= 2)");
  threshold->add_option("--curve", t_curve, "Also write the probes as a CSV curve to this file");

  // ucurve
  std::size_t u_n = 0;
  std::vector<double> u_p;
  std::size_t u_dim = 2;
  std::size_t u_trials = 100;
  std::size_t u_exact_limit = diam::kDefaultExactLimit;
  std::size_t u_catalog_max = 0;
  bool u_connected = false;
  auto* ucurve = app.add_subcommand("ucurve", "Histogram of the induced catalog-subgraph size k_hat");
  needed.emplace_back(ucurve, ucurve->add_option("--n", u_n, "Vertex count"));
  needed.emplace_back(ucurve, ucurve->add_option("--p", u_p, "Edge probability or a list of them"));
  ucurve->add_option("--dim", u_dim, "Dimension")->check(CLI::Range(2, 16));
  ucurve->add_option("--trials", u_trials, "Samples per p")->check(CLI::PositiveNumber);
  ucurve->add_option("--exact-limit", u_exact_limit, "Largest subproblem searched exactly");
  ucurve->add_option("--catalog-max", u_catalog_max, "Largest catalog graph (default n)");
  ucurve->add_flag("--connected", u_connected, "Connected variant");

  // chromo
  std::string c_points;
  std::size_t c_k = 4;
  std::size_t c_trials = 200;
  auto* chromo = app.add_subcommand("chromo", "Large k-colorable induced subgraph of a plane point set");
  chromo->add_option("points", c_points, "Point file (d = 2)")->required();
  chromo->add_option("--k", c_k, "Color classes kept")->check(CLI::Range(1, 7));
  chromo->add_option("--trials", c_trials, "Random colorings tried")->check(CLI::PositiveNumber);

  // catalog validate
  std::size_t v_max_k = 6;
  std::size_t v_max_d = 8;
  auto* catalog = app.add_subcommand("catalog", "Diameter-graph catalog");
  catalog->require_subcommand(1);
  auto* validate = catalog->add_subcommand("validate", "Validate every family up to the size bounds");
  validate->add_option("--max-k", v_max_k, "Largest polygon parameter k (2k+1 vertices)");
  validate->add_option("--max-d", v_max_d, "Largest dimension");

  auto* constants = app.add_subcommand("constants", "Print the reference constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!active->get_subcommands().empty()) active = active->get_subcommands().front();
    if (!g.config.empty()) apply_config(g.config, app, active);
    for (const auto& [owner, opt] : needed) {
      if (owner == active && opt->count() == 0) {
        throw InvalidInput(opt->get_name() + " is required");
      }
    }
    Sink sink(g.out);
    std::ostream& out = sink.stream();

    if (sample->parsed()) {
      write_graph(out, sample_gnp(GnpParams(s_n, s_p, g.seed)));
    } else if (decide->parsed()) {
      const Graph graph = load_graph(d_graph);
      realize::Verdict v;
      if (d_dim == 1) {
        v = d_oracle ? realize::decide_1d_oracle(graph) : realize::decide_1d(graph);
      } else {
        if (d_oracle) throw InvalidInput("--oracle applies to --dim 1 only");
        realize::PipelineOptions opts;
        opts.embed_restarts = d_restarts;
        opts.seed = g.seed;
        v = realize::decide(graph, d_dim, opts);
      }
      out << realize::to_json(v).dump(2) << '\n';
    } else if (threshold->parsed()) {
      t_opts.workers = g.workers;
      const auto decider = make_decider(t_dim, t_restarts);
      const auto est = harness::find_threshold(t_n, decider, g.seed, t_opts);
      const json config = {{"command", "threshold"},   {"n", t_n},           {"dim", t_dim},
                           {"trials", t_opts.trials},  {"tol", t_opts.tol},  {"growth", t_opts.max_growth},
                           {"restarts", t_restarts},   {"seed", g.seed}};
      harness::write_json_report(out, config, harness::to_json(est));
      if (!t_curve.empty()) {
        std::ofstream csv(t_curve);
        if (!csv) throw InvalidInput("cannot write \"" + t_curve + "\"");
        auto probes = est.probes;
        std::stable_sort(probes.begin(), probes.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
        harness::write_curve_csv(csv, config, probes);
      }
    } else if (ucurve->parsed()) {
      const std::size_t cat_max = u_catalog_max == 0 ? std::max<std::size_t>(u_n, 3) : u_catalog_max;
      const auto cat = diam::default_catalog(u_dim, cat_max);
      harness::URegimeOptions opts;
      opts.connected = u_connected;
      opts.exact_limit = u_exact_limit;
      opts.workers = g.workers;
      std::vector<harness::URegimeResult> rows;
      for (std::size_t i = 0; i < u_p.size(); ++i) {
        rows.push_back(harness::u_regime_experiment(u_n, u_p[i], u_dim, u_trials, cat, derive_seed(g.seed, i), opts));
      }
      const json config = {{"command", "ucurve"},    {"n", u_n},
                           {"p", u_p},               {"dim", u_dim},
                           {"trials", u_trials},     {"exact-limit", u_exact_limit},
                           {"catalog-max", cat_max}, {"connected", u_connected},
                           {"seed", g.seed}};
      harness::write_u_histogram_csv(out, config, rows);
    } else if (chromo->parsed()) {
      const auto pts = load_points(c_points);
      const auto res = plane::extract_low_chromatic_subgraph(pts, c_k, c_trials, g.seed);
      const json config = {{"command", "chromo"}, {"points", c_points}, {"k", c_k}, {"trials", c_trials},
                           {"seed", g.seed}};
      harness::write_json_report(out, config, plane::to_json(res));
    } else if (validate->parsed()) {
      std::vector<diam::CatalogEntry> entries;
      for (std::size_t k = 1; k <= v_max_k; ++k) entries.push_back(diam::odd_polygon(k));
      for (std::size_t d = 1; d <= v_max_d; ++d) entries.push_back(diam::simplex(d));
      for (std::size_t k = 1; k <= v_max_k; ++k) {
        for (std::size_t a = 1; a + 2 <= v_max_d; ++a) {
          try {
            entries.push_back(diam::apex_stack(k, a));
          } catch (const GeometryInfeasible&) {
          }
        }
      }
      entries.push_back(diam::triangle_pendant());
      json list = json::array();
      std::size_t passed = 0;
      for (auto& e : entries) {
        passed += diam::validate_entry(e) ? 1 : 0;
        list.push_back(diam::to_json(e));
      }
      const json config = {{"command", "catalog validate"}, {"max-k", v_max_k}, {"max-d", v_max_d}};
      harness::write_json_report(out, config,
                                 {{"entries", std::move(list)}, {"validated", passed}, {"total", entries.size()}});
    } else if (constants->parsed()) {
      out << harness::to_json(harness::reference_table()).dump(2) << '\n';
    }
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NonMonotoneSignal& e) {
    std::cerr << "non-monotone signal: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
}
