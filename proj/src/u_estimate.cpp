#include "udg/u_estimate.hpp"

#include <algorithm>
#include <cmath>

#include "udg/components.hpp"
#include "udg/errors.hpp"
#include "udg/induced.hpp"

namespace udg::diam {

namespace {

// Rim length of entries isomorphic to C_L joined with K_{hubs}; 0 otherwise.
std::size_t rim_length(const CatalogEntry& e, std::size_t hubs) {
  switch (e.family) {
    case Family::OddPolygon: return hubs == 0 ? 2 * e.k + 1 : 0;
    case Family::Simplex: return e.d == hubs + 2 ? 3 : 0;
    case Family::ApexStack: return e.a == hubs ? 2 * e.k + 1 : 0;
    case Family::TrianglePendant: return 0;
  }
  return 0;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

class CliqueScan {
 public:
  CliqueScan(const Graph& g, std::size_t hubs, const std::vector<bool>& allowed, std::size_t exact_limit)
      : g_(g), hubs_(hubs), allowed_(allowed), exact_limit_(exact_limit) {}

  void run(std::size_t& best, std::vector<Vertex>& witness, bool& exact) {
    best_ = &best;
    witness_ = &witness;
    exact_ = &exact;
    std::vector<Vertex> all(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) all[v] = v;
    grow(all);
  }

 private:
  // common: vertices adjacent to every vertex of clique_.
  void grow(const std::vector<Vertex>& common) {
    if (common.size() + clique_.size() <= *best_) return;
    if (clique_.size() == hubs_) {
      search(common);
      return;
    }
    for (Vertex v : common) {
      if (!clique_.empty() && v < clique_.back()) continue;
      std::vector<Vertex> next;
      for (Vertex w : common) {
        if (w != v && g_.adjacent(v, w)) next.push_back(w);
      }
      clique_.push_back(v);
      grow(next);
      clique_.pop_back();
    }
  }

  void search(const std::vector<Vertex>& common) {
    const Graph sub = g_.induced(common);
    std::optional<InducedCycle> cyc;
    if (common.size() <= exact_limit_) {
      cyc = largest_induced_cycle(sub, allowed_, common.size());
    } else {
      *exact_ = false;
      cyc = induced_cycle_heuristic(sub, allowed_, kHeuristicNodesPerRoot);
    }
    if (!cyc || cyc->length + hubs_ <= *best_) return;
    *best_ = cyc->length + hubs_;
    std::vector<Vertex> w = clique_;
    for (Vertex v : cyc->vertices) w.push_back(common[v]);
    std::sort(w.begin(), w.end());
    *witness_ = std::move(w);
  }

  const Graph& g_;
  std::size_t hubs_;
  const std::vector<bool>& allowed_;
  std::size_t exact_limit_;
  std::vector<Vertex> clique_;
  std::size_t* best_ = nullptr;
  std::vector<Vertex>* witness_ = nullptr;
  bool* exact_ = nullptr;
};

double log_inv_q(double x, double p) { return std::log(x) / -std::log1p(-p); }

}  // namespace

UEstimate estimate_u(const Graph& g, std::size_t d, const std::vector<CatalogEntry>& catalog, bool connected,
                     std::size_t exact_limit) {
  if (d < 2) throw InvalidInput("estimate_u needs d >= 2");
  UEstimate out;
  out.n = g.order();
  out.d = d;
  out.connected_variant = connected;

  const std::size_t hubs = d - 2;
  std::vector<bool> allowed;
  std::vector<const CatalogEntry*> patterns;
  for (const auto& e : catalog) {
    if (!e.validated || e.claimed_chi != d + 1 || e.d > d) continue;
    if (connected && !is_connected(e.claimed_graph)) continue;
    if (const std::size_t len = rim_length(e, hubs); len != 0) {
      if (allowed.size() <= len) allowed.resize(len + 1, false);
      allowed[len] = true;
    } else {
      patterns.push_back(&e);
    }
  }

  std::size_t best = 0;
  if (!allowed.empty()) CliqueScan(g, hubs, allowed, exact_limit).run(best, out.witness, out.exact);
  for (const CatalogEntry* e : patterns) {
    const Graph& h = e->claimed_graph;
    if (h.order() <= best) continue;
    if (g.order() > exact_limit) {
      out.exact = false;
      continue;
    }
    if (auto w = contains_induced(g, h, g.order())) {
      best = h.order();
      out.witness = std::move(*w);
    }
  }
  out.k_hat = best;
  out.frac_success = best > 0 ? 1.0 : 0.0;
  return out;
}

UBounds theoretical_u_bounds(std::size_t n, double p, std::size_t d) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("theoretical_u_bounds needs 0 < p < 1");
  if (d < 2) throw InvalidInput("theoretical_u_bounds needs d >= 2");
  const double np = static_cast<double>(n) * p;
  UBounds b;
  b.L1 = 2.0 * log_inv_q(np, p);
  b.L2 = (2.0 + 4.0 * std::log(p) / std::log(np)) * log_inv_q(np, p);
  b.U_gen = static_cast<double>(d + 1) * b.L1;
  b.U_const_p = static_cast<double>(d / 2) * b.L1;
  const double dm1 = static_cast<double>(d - 1);
  b.zero_regime_bound = d >= 3 ? 2.0 * dm1 * std::log(dm1) : 1.0;
  return b;
}

RegimeSpec evaluate_regime(std::size_t n, double p, double alpha, double C) {
  const double nn = static_cast<double>(n);
  return {p * nn, p * std::pow(nn, alpha), p * std::pow(nn, 0.25) / std::log(nn), (1.0 - p) * std::log(nn), alpha,
          C};
}

nlohmann::json to_json(const UEstimate& e) {
  return {{"n", e.n},
          {"p", e.p},
          {"d", e.d},
          {"k_hat", e.k_hat},
          {"connected_variant", e.connected_variant},
          {"exact", e.exact},
          {"trials", e.trials},
          {"frac_success", e.frac_success},
          {"witness", e.witness}};
}

nlohmann::json to_json(const UBounds& b) {
  return {{"L1", b.L1},
          {"L2", b.L2},
          {"U_gen", b.U_gen},
          {"U_const_p", b.U_const_p},
          {"zero_regime_bound", b.zero_regime_bound}};
}

nlohmann::json to_json(const RegimeSpec& r) {
  return {{"tau_pn", r.tau_pn},
          {"tau_alpha", r.tau_alpha},
          {"tau_quarter", r.tau_quarter},
          {"sigma", r.sigma},
          {"alpha", r.alpha},
          {"C", r.C}};
}

}  // namespace udg::diam
