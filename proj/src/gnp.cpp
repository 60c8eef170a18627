#include "udg/gnp.hpp"

#include <cmath>
#include <string>

#include "udg/errors.hpp"
#include "udg/rng.hpp"

namespace udg {

namespace {

constexpr int kBands = 64;

double band_top(int j) { return std::ldexp(1.0, j - kBands); }
double band_bottom(int j) { return j == 0 ? 0.0 : std::ldexp(1.0, j - 1 - kBands); }

}  // namespace

GnpParams::GnpParams(std::size_t n_, double p_, std::uint64_t seed_) : n(n_), p(p_), seed(seed_) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1], got " + std::to_string(p));
}

std::vector<TimedEdge> sample_arrivals(std::size_t n, double p_max, std::uint64_t seed) {
  if (!(p_max >= 0.0 && p_max <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;

  int last_band = 0;
  while (band_top(last_band) < p_max) ++last_band;

  std::vector<std::uint64_t> chosen;
  std::vector<double> arrival;
  std::vector<std::uint64_t> ranks;
  std::vector<double> fresh_arrival;
  for (int j = 0; j <= last_band; ++j) {
    const std::uint64_t free = pairs - chosen.size();
    if (free == 0) break;
    const double lo = band_bottom(j);
    const double hi = band_top(j);
    const double q = (hi - lo) / (1.0 - lo);
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(j)));

    ranks.clear();
    fresh_arrival.clear();
    if (q >= 1.0) {
      for (std::uint64_t r = 0; r < free; ++r) {
        ranks.push_back(r);
        fresh_arrival.push_back(lo + (hi - lo) * rng.uniform_open_zero());
      }
    } else {
      const double log_miss = std::log1p(-q);
      double next = -1.0;
      for (;;) {
        next += 1.0 + std::floor(std::log(rng.uniform_open_zero()) / log_miss);
        if (next >= static_cast<double>(free)) break;
        ranks.push_back(static_cast<std::uint64_t>(next));
        fresh_arrival.push_back(lo + (hi - lo) * rng.uniform_open_zero());
      }
    }
    if (ranks.empty()) continue;

    // Rank r among unchosen pairs -> absolute pair index, merged into the chosen list.
    std::vector<std::uint64_t> merged;
    std::vector<double> merged_arrival;
    merged.reserve(chosen.size() + ranks.size());
    merged_arrival.reserve(chosen.size() + ranks.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      while (k < chosen.size() && chosen[k] <= ranks[i] + k) {
        merged.push_back(chosen[k]);
        merged_arrival.push_back(arrival[k]);
        ++k;
      }
      merged.push_back(ranks[i] + k);
      merged_arrival.push_back(fresh_arrival[i]);
    }
    for (; k < chosen.size(); ++k) {
      merged.push_back(chosen[k]);
      merged_arrival.push_back(arrival[k]);
    }
    chosen.swap(merged);
    arrival.swap(merged_arrival);
  }

  std::vector<TimedEdge> out;
  Vertex u = 0;
  std::uint64_t row_start = 0;
  std::uint64_t row_len = n < 1 ? 0 : n - 1;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (arrival[i] > p_max) continue;
    while (chosen[i] >= row_start + row_len) {
      row_start += row_len;
      --row_len;
      ++u;
    }
    const auto v = static_cast<Vertex>(u + 1 + (chosen[i] - row_start));
    out.push_back({{u, v}, arrival[i]});
  }
  return out;
}

Graph sample_gnp(const GnpParams& params) {
  const auto timed = sample_arrivals(params.n, params.p, params.seed);
  std::vector<Edge> es;
  es.reserve(timed.size());
  for (const auto& t : timed) es.push_back(t.edge);
  return Graph(params.n, es);
}

}  // namespace udg
