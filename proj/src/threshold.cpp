#include "udg/threshold.hpp"

#include <cmath>

#include "udg/errors.hpp"

namespace udg::harness {

namespace {

constexpr double kTarget = 0.5;
constexpr double kSmallestProbe = 1e-300;

class Bisection {
 public:
  Bisection(std::size_t n, const Decider& decider, std::uint64_t seed, const ThresholdOptions& options,
            ThresholdEstimate& out)
      : n_(n), decider_(decider), seed_(seed), options_(options), out_(out) {}

  // True iff the certified-YES fraction at p exceeds 1/2.
  bool above(double p) {
    if (out_.probes.size() >= options_.max_probes) {
      throw NonMonotoneSignal("threshold search exceeded " + std::to_string(options_.max_probes) + " probes");
    }
    std::size_t t = options_.trials;
    auto est = estimate_probability(n_, p, t, decider_, seed_, options_.workers);
    while (est.ci_yes().contains(kTarget) && 2 * t <= options_.trials * options_.max_growth) {
      t *= 2;
      est = estimate_probability(n_, p, t, decider_, seed_, options_.workers);
    }
    check_against_history(est);
    out_.probes.push_back(est);
    return est.frac_yes() > kTarget;
  }

  bool exhausted() const { return out_.probes.size() >= options_.max_probes; }

 private:
  void check_against_history(const ProbabilityEstimate& est) const {
    const Interval ci = est.ci_yes();
    for (const auto& old : out_.probes) {
      const Interval oc = old.ci_yes();
      const bool inverted = (old.p < est.p && oc.hi < ci.lo) || (est.p < old.p && ci.hi < oc.lo);
      if (inverted) {
        throw NonMonotoneSignal("YES fraction rises with p between p=" + std::to_string(std::min(old.p, est.p)) +
                                " and p=" + std::to_string(std::max(old.p, est.p)) + "; increase trials");
      }
    }
  }

  std::size_t n_;
  const Decider& decider_;
  std::uint64_t seed_;
  const ThresholdOptions& options_;
  ThresholdEstimate& out_;
};

}  // namespace

double scaled_constant(double p, std::size_t n, std::size_t dimension) {
  const double nn = static_cast<double>(n);
  return dimension == 1 ? p * std::pow(nn, 4.0 / 3.0) : p * nn;
}

ThresholdEstimate find_threshold(std::size_t n, const Decider& decider, std::uint64_t seed,
                                 const ThresholdOptions& options) {
  if (n < 2) throw InvalidInput("threshold search needs n >= 2");
  if (options.trials == 0) throw InvalidInput("threshold search needs at least one trial per probe");
  if (!(options.tol > 0.0 && options.tol < 1.0)) throw InvalidInput("threshold tolerance must lie in (0, 1)");
  if (options.max_growth == 0) throw InvalidInput("trial growth factor must be at least 1");

  ThresholdEstimate out;
  out.n = n;
  out.dimension = decider.dimension;
  out.decider = decider.id;
  out.seed = seed;
  out.trials = options.trials;
  out.tol = options.tol;
  out.lower_bound = decider.id != "1d_exact";

  Bisection search(n, decider, seed, options, out);
  const double start = std::min(1.0, 1.0 / static_cast<double>(n));
  double lo = 0.0;
  double hi = 0.0;
  if (search.above(start)) {
    lo = start;
    for (;;) {
      if (lo >= 1.0) {
        out.degenerate = true;
        out.p_lo = out.p_hi = out.p_star_hat = 1.0;
        out.scaled_constant = scaled_constant(1.0, n, out.dimension);
        return out;
      }
      hi = std::min(1.0, 2.0 * lo);
      if (!search.above(hi)) break;
      lo = hi;
    }
  } else {
    hi = start;
    for (;;) {
      lo = hi / 2.0;
      if (lo < kSmallestProbe || search.exhausted()) {
        out.degenerate = true;
        out.p_lo = out.p_star_hat = 0.0;
        out.p_hi = hi;
        out.scaled_constant = 0.0;
        return out;
      }
      if (search.above(lo)) break;
      hi = lo;
    }
  }

  while (hi - lo > options.tol * hi && !search.exhausted()) {
    const double mid = 0.5 * (lo + hi);
    if (search.above(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.p_lo = lo;
  out.p_hi = hi;
  out.p_star_hat = 0.5 * (lo + hi);
  out.scaled_constant = scaled_constant(out.p_star_hat, n, out.dimension);
  return out;
}

}  // namespace udg::harness
