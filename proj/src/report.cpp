#include "udg/report.hpp"

#include <cstdio>
#include <ostream>
#include <string>

namespace udg::harness {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json cited(const CitedValue& c) { return {{"value", c.value}, {"source", c.source}}; }

}  // namespace

nlohmann::json to_json(const Interval& i) { return nlohmann::json::array({i.lo, i.hi}); }

nlohmann::json to_json(const ProbabilityEstimate& e) {
  return {{"n", e.n},
          {"p", e.p},
          {"trials", e.trials},
          {"decider", e.decider},
          {"dimension", e.dimension},
          {"seed", e.seed},
          {"counts", {{"yes", e.yes}, {"no", e.no}, {"unknown", e.unknown}}},
          {"frac_yes", e.frac_yes()},
          {"frac_no", e.frac_no()},
          {"frac_unknown", e.frac_unknown()},
          {"ci_yes", to_json(e.ci_yes())},
          {"ci_no", to_json(e.ci_no())},
          {"ci_unknown", to_json(e.ci_unknown())},
          {"probability_bounds", to_json(e.bounds())}};
}

nlohmann::json to_json(const ThresholdEstimate& e) {
  nlohmann::json probes = nlohmann::json::array();
  for (const auto& p : e.probes) {
    probes.push_back({{"p", p.p}, {"trials", p.trials}, {"frac_yes", p.frac_yes()}, {"ci_yes", to_json(p.ci_yes())}});
  }
  return {{"n", e.n},
          {"dimension", e.dimension},
          {"decider", e.decider},
          {"seed", e.seed},
          {"trials", e.trials},
          {"tol", e.tol},
          {"p_star_hat", e.p_star_hat},
          {"bracket", {e.p_lo, e.p_hi}},
          {"scaled_constant", e.scaled_constant},
          {"scaling", e.dimension == 1 ? "p*n^(4/3)" : "p*n"},
          {"degenerate", e.degenerate},
          {"lower_bound", e.lower_bound},
          {"probes", std::move(probes)}};
}

nlohmann::json to_json(const URegimeResult& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [k, c] : r.histogram) hist[std::to_string(k)] = c;
  nlohmann::json j = {{"n", r.n},
                      {"p", r.p},
                      {"d", r.d},
                      {"trials", r.trials},
                      {"seed", r.seed},
                      {"connected", r.connected},
                      {"exact_limit", r.exact_limit},
                      {"exact", r.all_exact},
                      {"histogram", std::move(hist)},
                      {"mode", r.mode},
                      {"mean", r.mean},
                      {"frac_zero", r.frac_zero},
                      {"regime", diam::to_json(r.regime)}};
  j["bounds"] = r.bounds ? diam::to_json(*r.bounds) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const TheoryConstants& t) {
  nlohmann::json cd = nlohmann::json::object();
  for (const auto& [d, v] : t.c_d) cd[std::to_string(d)] = cited(v);
  return {{"t0", cited(t.t0)},
          {"c_d", std::move(cd)},
          {"one_d",
           {{"lower", cited(t.one_d_lower)}, {"upper", cited(t.one_d_upper)}, {"exact", cited(t.one_d_exact)}}},
          {"kappa", cited(t.kappa)},
          {"four_color_share", cited(t.four_color_share)}};
}

void write_json_report(std::ostream& out, const nlohmann::json& config, const nlohmann::json& result) {
  out << nlohmann::json{{"config", config}, {"result", result}}.dump(2) << '\n';
}

void write_curve_csv(std::ostream& out, const nlohmann::json& config, const std::vector<ProbabilityEstimate>& rows) {
  out << "# config: " << config.dump() << '\n';
  out << "n,p,frac_yes,frac_no,frac_unknown,ci_lo,ci_hi\n";
  for (const auto& e : rows) {
    const Interval ci = e.ci_yes();
    out << e.n << ',' << num(e.p) << ',' << num(e.frac_yes()) << ',' << num(e.frac_no()) << ','
        << num(e.frac_unknown()) << ',' << num(ci.lo) << ',' << num(ci.hi) << '\n';
  }
}

void write_u_histogram_csv(std::ostream& out, const nlohmann::json& config, const std::vector<URegimeResult>& rows) {
  out << "# config: " << config.dump() << '\n';
  out << "n,p,d,k_hat,count,fraction,exact\n";
  for (const auto& r : rows) {
    for (const auto& [k, c] : r.histogram) {
      out << r.n << ',' << num(r.p) << ',' << r.d << ',' << k << ',' << c << ','
          << num(static_cast<double>(c) / static_cast<double>(r.trials)) << ',' << (r.all_exact ? "true" : "false")
          << '\n';
    }
  }
}

}  // namespace udg::harness
