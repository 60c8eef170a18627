#include <cmath>
#include <sstream>

#include "doctest.h"
#include "udg/catalog.hpp"
#include "udg/constants.hpp"
#include "udg/decide.hpp"
#include "udg/errors.hpp"
#include "udg/gnp.hpp"
#include "udg/probability.hpp"
#include "udg/report.hpp"
#include "udg/rng.hpp"
#include "udg/threshold.hpp"
#include "udg/u_estimate.hpp"
#include "udg/u_regime.hpp"

using namespace udg;
using namespace udg::harness;
using realize::Answer;

namespace {

/// YES fraction near 1 below p ~ 0.0065, near 0 around 0.0075 and near 0.37
/// at 0.01 for n = 200: increasing between the last two probes.
Decider rising_decider() {
  return Decider{"rising", 2, [](const Graph& g, std::uint64_t seed) {
                   const std::size_t m = g.edge_count();
                   if (m < 130) return Answer::Yes;
                   if (m >= 180 && seed % 10 < 4) return Answer::Yes;
                   return Answer::No;
                 }};
}

std::string json_text(const nlohmann::json& config, const nlohmann::json& result) {
  std::ostringstream out;
  write_json_report(out, config, result);
  return out.str();
}

}  // namespace

TEST_CASE("Wilson interval") {
  const auto half = wilson(5, 10);
  CHECK(half.lo == doctest::Approx(0.2366).epsilon(1e-3));
  CHECK(half.hi == doctest::Approx(0.7634).epsilon(1e-3));
  CHECK(wilson(0, 10).lo == doctest::Approx(0.0));
  CHECK(wilson(10, 10).hi == doctest::Approx(1.0));
  const auto big = wilson(300, 1000);
  CHECK(big.contains(0.3));
  CHECK(big.hi - big.lo < 0.06);
  CHECK(big.lo > 0.27);
  for (std::size_t s = 0; s <= 50; ++s) {
    const auto w = wilson(s, 50);
    CHECK(w.lo >= 0.0);
    CHECK(w.hi <= 1.0);
    CHECK(w.contains(static_cast<double>(s) / 50.0));
  }
}

TEST_CASE("estimate_probability at the extremes") {
  const auto empty = estimate_probability(50, 0.0, 100, one_d_exact(), 1);
  CHECK(empty.yes == 100);
  CHECK(empty.frac_yes() == 1.0);
  const auto full = estimate_probability(50, 1.0, 100, one_d_exact(), 1);
  CHECK(full.no == 100);
  CHECK(full.frac_no() == 1.0);
  const auto mixed = estimate_probability(30, 0.05, 300, pipeline(2, 2), 4);
  CHECK(mixed.yes + mixed.no + mixed.unknown == mixed.trials);
  CHECK(mixed.frac_yes() + mixed.frac_no() + mixed.frac_unknown() == doctest::Approx(1.0));
  CHECK(mixed.bounds().lo <= mixed.bounds().hi);
  CHECK_THROWS_AS(estimate_probability(10, 1.5, 10, one_d_exact(), 1), InvalidInput);
  CHECK_THROWS_AS(estimate_probability(10, 0.5, 0, one_d_exact(), 1), InvalidInput);
}

TEST_CASE("trial t decides the sample drawn from the derived seed") {
  const std::size_t n = 40;
  const double p = 0.03;
  const std::uint64_t seed = 17;
  std::size_t yes = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    const Graph g = sample_gnp(GnpParams(n, p, derive_seed(seed, t)));
    yes += realize::decide_1d(g).answer == Answer::Yes ? 1 : 0;
  }
  CHECK(estimate_probability(n, p, 200, one_d_exact(), seed).yes == yes);
}

TEST_CASE("coupled samples make monotone deciders monotone in p") {
  const std::size_t n = 60;
  std::size_t prev = 1000;
  for (double p : {0.002, 0.005, 0.01, 0.02, 0.04, 0.08}) {
    const auto est = estimate_probability(n, p, 1000, one_d_exact(), 99);
    CHECK(est.yes <= prev);
    prev = est.yes;
  }
  for (std::size_t t = 0; t < 50; ++t) {
    const std::uint64_t s = derive_seed(99, t);
    const Graph lo = sample_gnp(GnpParams(n, 0.01, s));
    const Graph hi = sample_gnp(GnpParams(n, 0.03, s));
    for (const auto& e : lo.edges()) CHECK(hi.adjacent(e.u, e.v));
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto a = estimate_probability(80, 0.02, 400, pipeline(2, 3), 5, 1);
  const auto b = estimate_probability(80, 0.02, 400, pipeline(2, 3), 5, 4);
  CHECK(a.yes == b.yes);
  CHECK(a.no == b.no);
  CHECK(a.unknown == b.unknown);

  ThresholdOptions o1;
  o1.trials = 200;
  o1.tol = 0.05;
  ThresholdOptions o4 = o1;
  o4.workers = 4;
  const auto t1 = find_threshold(64, one_d_exact(), 8, o1);
  const auto t4 = find_threshold(64, one_d_exact(), 8, o4);
  CHECK(to_json(t1) == to_json(t4));
}

TEST_CASE("find_threshold on the line") {
  ThresholdOptions opts;
  opts.trials = 400;
  opts.tol = 0.02;
  const auto t = find_threshold(128, one_d_exact(), 3, opts);
  CHECK_FALSE(t.degenerate);
  CHECK_FALSE(t.lower_bound);
  CHECK(t.p_lo < t.p_hi);
  CHECK(t.p_hi - t.p_lo <= opts.tol * t.p_hi);
  CHECK(t.p_star_hat == doctest::Approx(0.5 * (t.p_lo + t.p_hi)));
  CHECK(t.scaled_constant == doctest::Approx(t.p_star_hat * std::pow(128.0, 4.0 / 3.0)));
  CHECK(t.scaled_constant > 1.0);
  CHECK(t.scaled_constant < 2.6);
  CHECK(t.probes.front().p == doctest::Approx(1.0 / 128));
  for (const auto& pr : t.probes) CHECK(pr.trials >= opts.trials);
  CHECK(find_threshold(32, pipeline(2, 2), 3, ThresholdOptions{100, 0.1, 2, 200, 1}).lower_bound);
}

TEST_CASE("degenerate brackets") {
  ThresholdOptions opts;
  opts.trials = 50;
  const auto yes = find_threshold(20, constant(Answer::Yes), 1, opts);
  CHECK(yes.degenerate);
  CHECK(yes.p_star_hat == 1.0);
  CHECK(yes.scaled_constant == doctest::Approx(scaled_constant(1.0, 20, yes.dimension)));

  opts.max_probes = 30;
  const auto no = find_threshold(20, constant(Answer::No), 1, opts);
  CHECK(no.degenerate);
  CHECK(no.p_star_hat == 0.0);
  CHECK(no.probes.size() == 30);
}

TEST_CASE("non-monotone signals are reported") {
  ThresholdOptions opts;
  opts.trials = 2000;
  CHECK_THROWS_AS(find_threshold(200, rising_decider(), 12, opts), NonMonotoneSignal);

  opts.trials = 20;
  opts.max_probes = 1;
  CHECK_THROWS_AS(find_threshold(20, constant(Answer::Yes), 1, opts), NonMonotoneSignal);

  opts = ThresholdOptions{};
  CHECK_THROWS_AS(find_threshold(1, one_d_exact(), 1, opts), InvalidInput);
  opts.tol = 0.0;
  CHECK_THROWS_AS(find_threshold(10, one_d_exact(), 1, opts), InvalidInput);
}

TEST_CASE("u regime experiment") {
  const auto catalog = diam::default_catalog(2, 25);
  URegimeOptions opts;
  opts.exact_limit = 25;
  const auto r = u_regime_experiment(25, 0.3, 2, 30, catalog, 6, opts);
  CHECK(r.k_hat.size() == 30);
  CHECK(r.all_exact);
  std::size_t total = 0;
  std::size_t best_count = 0;
  double sum = 0.0;
  for (const auto& [k, c] : r.histogram) {
    total += c;
    if (c > best_count) best_count = c;
  }
  CHECK(total == 30);
  CHECK(r.histogram.at(r.mode) == best_count);
  for (std::size_t t = 0; t < 30; ++t) {
    const Graph g = sample_gnp(GnpParams(25, 0.3, derive_seed(6, t)));
    CHECK(r.k_hat[t] == diam::estimate_u(g, 2, catalog, false, 25).k_hat);
    sum += static_cast<double>(r.k_hat[t]);
  }
  CHECK(r.mean == doctest::Approx(sum / 30));
  REQUIRE(r.bounds.has_value());
  CHECK(r.bounds->L1 == doctest::Approx(diam::theoretical_u_bounds(25, 0.3, 2).L1));

  opts.workers = 4;
  const auto r4 = u_regime_experiment(25, 0.3, 2, 30, catalog, 6, opts);
  CHECK(to_json(r) == to_json(r4));

  const auto full = u_regime_experiment(12, 1.0, 3, 3, diam::default_catalog(3, 12), 1, opts);
  CHECK_FALSE(full.bounds.has_value());
  CHECK(full.mode == 4);
  const auto none = u_regime_experiment(12, 0.0, 3, 3, diam::default_catalog(3, 12), 1, opts);
  CHECK(none.frac_zero == 1.0);
}

TEST_CASE("reports are byte-identical across worker counts") {
  const nlohmann::json config{{"n", 64}, {"seed", 2}};
  std::ostringstream c1;
  std::ostringstream c4;
  std::vector<ProbabilityEstimate> rows1;
  std::vector<ProbabilityEstimate> rows4;
  for (double p : {0.005, 0.01, 0.02}) {
    rows1.push_back(estimate_probability(64, p, 100, one_d_exact(), 2, 1));
    rows4.push_back(estimate_probability(64, p, 100, one_d_exact(), 2, 3));
  }
  write_curve_csv(c1, config, rows1);
  write_curve_csv(c4, config, rows4);
  CHECK(c1.str() == c4.str());
  std::istringstream lines(c1.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# config: ", 0) == 0);
  std::getline(lines, line);
  CHECK(line == "n,p,frac_yes,frac_no,frac_unknown,ci_lo,ci_hi");

  CHECK(json_text(config, to_json(rows1[1])) == json_text(config, to_json(rows4[1])));
  const auto parsed = nlohmann::json::parse(json_text(config, to_json(rows1[1])));
  CHECK(parsed.at("config") == config);
  CHECK(parsed.at("result").at("counts").at("yes") == rows1[1].yes);

  std::ostringstream h;
  const auto u = u_regime_experiment(15, 0.4, 2, 10, diam::default_catalog(2, 15), 1, URegimeOptions{false, 15, 2, 0.25});
  write_u_histogram_csv(h, config, {u});
  CHECK(h.str().find("n,p,d,k_hat,count,fraction,exact") != std::string::npos);
}

TEST_CASE("reference constants") {
  const auto& t = reference_table();
  CHECK(t.t0.value == doctest::Approx(14.797));
  CHECK(t.c_d.size() == 6);
  CHECK(t.c_d.at(3).value == doctest::Approx(55.272));
  CHECK(t.c_d.at(8).value == doctest::Approx(8675.785));
  CHECK(t.one_d_lower.value == doctest::Approx(std::cbrt(3.0)));
  CHECK(t.one_d_upper.value == doctest::Approx(std::cbrt(12.0)));
  CHECK(t.one_d_exact.value == doctest::Approx(1.608).epsilon(1e-3));
  CHECK(t.kappa.value == doctest::Approx(4.36));
  CHECK(t.four_color_share.value == doctest::Approx(4.0 / 4.36).epsilon(1e-3));
  for (const auto& [d, v] : t.c_d) CHECK_FALSE(v.source.empty());
  const auto j = to_json(t);
  CHECK(j.contains("t0"));
}
