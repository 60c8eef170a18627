#include "udg/probability.hpp"

#include <cmath>
#include <vector>

#include "parallel.hpp"
#include "udg/errors.hpp"
#include "udg/gnp.hpp"
#include "udg/rng.hpp"

namespace udg::harness {

Decider one_d_exact() {
  return {"1d_exact", 1, [](const Graph& g, std::uint64_t) { return realize::decide_1d(g).answer; }};
}

Decider pipeline(std::size_t d, std::size_t embed_restarts) {
  if (d < 2) throw InvalidInput("pipeline decider needs d >= 2");
  return {"pipeline(" + std::to_string(d) + ")", d, [d, embed_restarts](const Graph& g, std::uint64_t seed) {
            realize::PipelineOptions opts;
            opts.embed_restarts = embed_restarts;
            opts.seed = seed;
            return realize::decide(g, d, opts).answer;
          }};
}

Decider constant(realize::Answer answer) {
  return {std::string("always_") + realize::to_string(answer), 1,
          [answer](const Graph&, std::uint64_t) { return answer; }};
}

Interval wilson(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double nt = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double centre = (ph + z2 / (2.0 * nt)) / (1.0 + z2 / nt);
  const double half = z / (1.0 + z2 / nt) * std::sqrt(ph * (1.0 - ph) / nt + z2 / (4.0 * nt * nt));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double ProbabilityEstimate::frac_yes() const {
  return trials == 0 ? 0.0 : static_cast<double>(yes) / static_cast<double>(trials);
}
double ProbabilityEstimate::frac_no() const {
  return trials == 0 ? 0.0 : static_cast<double>(no) / static_cast<double>(trials);
}
double ProbabilityEstimate::frac_unknown() const {
  return trials == 0 ? 0.0 : static_cast<double>(unknown) / static_cast<double>(trials);
}

ProbabilityEstimate estimate_probability(std::size_t n, double p, std::size_t trials, const Decider& decider,
                                         std::uint64_t seed, std::size_t workers) {
  if (!decider.decide) throw InvalidInput("decider has no decision function");
  if (trials == 0) throw InvalidInput("probability estimate needs at least one trial");
  (void)GnpParams(n, p, seed);  // validates p
  std::vector<realize::Answer> answers(trials, realize::Answer::Unknown);
  detail::parallel_for(trials, workers, [&](std::size_t t) {
    const std::uint64_t s = derive_seed(seed, t);
    answers[t] = decider.decide(sample_gnp(GnpParams(n, p, s)), s);
  });
  ProbabilityEstimate est;
  est.n = n;
  est.p = p;
  est.trials = trials;
  est.decider = decider.id;
  est.dimension = decider.dimension;
  est.seed = seed;
  for (auto a : answers) {
    switch (a) {
      case realize::Answer::Yes: ++est.yes; break;
      case realize::Answer::No: ++est.no; break;
      case realize::Answer::Unknown: ++est.unknown; break;
    }
  }
  return est;
}

}  // namespace udg::harness
