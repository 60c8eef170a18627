#include "udg/u_regime.hpp"

#include "parallel.hpp"
#include "udg/errors.hpp"
#include "udg/gnp.hpp"
#include "udg/rng.hpp"

namespace udg::harness {

URegimeResult u_regime_experiment(std::size_t n, double p, std::size_t d, std::size_t trials,
                                  const std::vector<diam::CatalogEntry>& catalog, std::uint64_t seed,
                                  const URegimeOptions& options) {
  if (trials == 0) throw InvalidInput("regime experiment needs at least one trial");
  if (d < 2) throw InvalidInput("regime experiment needs d >= 2");
  (void)GnpParams(n, p, seed);

  URegimeResult out;
  out.n = n;
  out.p = p;
  out.d = d;
  out.trials = trials;
  out.seed = seed;
  out.connected = options.connected;
  out.exact_limit = options.exact_limit;
  out.k_hat.assign(trials, 0);

  std::vector<char> exact(trials, 1);
  detail::parallel_for(trials, options.workers, [&](std::size_t t) {
    const Graph g = sample_gnp(GnpParams(n, p, derive_seed(seed, t)));
    const auto est = diam::estimate_u(g, d, catalog, options.connected, options.exact_limit);
    out.k_hat[t] = est.k_hat;
    exact[t] = est.exact ? 1 : 0;
  });

  double sum = 0.0;
  std::size_t zeros = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    ++out.histogram[out.k_hat[t]];
    sum += static_cast<double>(out.k_hat[t]);
    zeros += out.k_hat[t] == 0 ? 1 : 0;
    out.all_exact = out.all_exact && exact[t];
  }
  std::size_t best = 0;
  for (const auto& [k, count] : out.histogram) {
    if (count > best) {
      best = count;
      out.mode = k;
    }
  }
  out.mean = sum / static_cast<double>(trials);
  out.frac_zero = static_cast<double>(zeros) / static_cast<double>(trials);
  out.regime = diam::evaluate_regime(n, p, options.alpha);
  if (p > 0.0 && p < 1.0) out.bounds = diam::theoretical_u_bounds(n, p, d);
  return out;
}

}  // namespace udg::harness
