#include "udg/exact_solvers.hpp"

#include <algorithm>
#include <string>

#include "bits.hpp"
#include "udg/errors.hpp"

namespace udg {

namespace {

void check_budget(const Graph& g, std::size_t budget, const char* what) {
  if (g.order() > budget) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.order()) +
                         " vertices exceed the exact-solver budget of " + std::to_string(budget));
  }
}

// Tomita-style maximum clique with greedy-coloring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : adj_(g) {}

  std::vector<Vertex> run() {
    const std::size_t w = adj_.words();
    std::vector<bits::Word> all(w, 0);
    for (std::size_t v = 0; v < adj_.order(); ++v) bits::set(all, v);
    if (adj_.order() > 0) expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(std::vector<bits::Word> cand) {
    const std::size_t w = adj_.words();
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    color_sort(cand, order, bound);
    std::vector<bits::Word> next(w);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      const auto row = adj_.row(v);
      for (std::size_t k = 0; k < w; ++k) next[k] = cand[k] & row[k];
      if (!bits::any(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      bits::reset(cand, v);
    }
  }

  void color_sort(const std::vector<bits::Word>& cand, std::vector<Vertex>& order,
                  std::vector<std::size_t>& bound) const {
    const std::size_t w = adj_.words();
    std::vector<bits::Word> left = cand;
    std::vector<bits::Word> klass(w);
    std::size_t color = 0;
    while (bits::any(left)) {
      ++color;
      klass = left;
      for (std::size_t v = bits::next_set(klass, 0); v < w * 64; v = bits::next_set(klass, v + 1)) {
        bits::reset(left, v);
        const auto row = adj_.row(v);
        for (std::size_t k = 0; k < w; ++k) klass[k] &= ~row[k];
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(color);
      }
    }
  }

  bits::Matrix adj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, std::size_t lower, std::size_t upper, std::vector<std::uint32_t> upper_coloring)
      : g_(g),
        n_(g.order()),
        color_(n_, kNone),
        seen_(n_ * upper, 0),
        saturation_(n_, 0),
        stride_(upper),
        lower_(lower),
        best_(upper),
        best_coloring_(std::move(upper_coloring)) {}

  Coloring run(const std::vector<Vertex>& clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<std::uint32_t>(i));
    search(clique.size(), clique.size());
    return {best_, best_coloring_};
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (seen_[w * stride_ + c]++ == 0) ++saturation_[w];
    }
  }

  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    for (Vertex w : g_.neighbors(v)) {
      if (--seen_[w * stride_ + c] == 0) --saturation_[w];
    }
    color_[v] = kNone;
  }

  Vertex pick() const {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kNone) continue;
      if (!found || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
        found = true;
      }
    }
    return best;
  }

  void search(std::size_t colored, std::size_t used) {
    if (colored == n_) {
      if (used < best_) {
        best_ = used;
        best_coloring_ = color_;
      }
      return;
    }
    const Vertex v = pick();
    for (std::uint32_t c = 0; c < used; ++c) {
      if (seen_[v * stride_ + c] != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (best_ == lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, static_cast<std::uint32_t>(used));
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint32_t> saturation_;
  std::size_t stride_;
  std::size_t lower_;
  std::size_t best_;
  std::vector<std::uint32_t> best_coloring_;
};

Coloring greedy_dsatur(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> color(n, kNone);
  std::vector<std::vector<char>> seen(n);
  std::vector<std::size_t> saturation(n, 0);
  std::size_t used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex v = 0;
    bool found = false;
    for (Vertex u = 0; u < n; ++u) {
      if (color[u] != kNone) continue;
      if (!found || saturation[u] > saturation[v] ||
          (saturation[u] == saturation[v] && g.degree(u) > g.degree(v))) {
        v = u;
        found = true;
      }
    }
    std::uint32_t c = 0;
    while (c < seen[v].size() && seen[v][c]) ++c;
    color[v] = c;
    used = std::max<std::size_t>(used, c + 1);
    for (Vertex w : g.neighbors(v)) {
      if (seen[w].size() <= c) seen[w].resize(c + 1, 0);
      if (!seen[w][c]) {
        seen[w][c] = 1;
        ++saturation[w];
      }
    }
  }
  return {used, color};
}

bool dfs_clique(const Graph& g, std::size_t k, std::vector<Vertex>& clique, const std::vector<Vertex>& cand) {
  if (clique.size() == k) return true;
  std::vector<Vertex> next;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (clique.size() + (cand.size() - i) < k) return false;
    const Vertex w = cand[i];
    const auto nw = g.neighbors(w);
    next.clear();
    std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), nw.begin(), nw.end(),
                          std::back_inserter(next));
    clique.push_back(w);
    if (dfs_clique(g, k, clique, next)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> color) {
  if (color.size() != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (color[e.u] == color[e.v]) return false;
  }
  return true;
}

std::vector<Vertex> maximum_clique(const Graph& g, std::size_t budget) {
  check_budget(g, budget, "maximum_clique");
  return CliqueSearch(g).run();
}

std::size_t independence_number(const Graph& g, std::size_t budget) {
  check_budget(g, budget, "independence_number");
  return CliqueSearch(g.complement()).run().size();
}

Coloring optimal_coloring(const Graph& g, std::size_t budget) {
  check_budget(g, budget, "chromatic_number");
  const std::size_t n = g.order();
  if (n == 0) return {};
  if (g.edge_count() == 0) return {1, std::vector<std::uint32_t>(n, 0)};

  Coloring upper = greedy_dsatur(g);
  const auto clique = CliqueSearch(g).run();
  std::size_t lower = clique.size();
  if (lower < 3 && !is_bipartite(g)) lower = 3;
  if (upper.colors == lower) return upper;

  DsaturSearch search(g, lower, upper.colors, upper.color);
  return search.run(clique);
}

std::size_t chromatic_number(const Graph& g, std::size_t budget) { return optimal_coloring(g, budget).colors; }

std::optional<std::vector<Vertex>> find_clique(const Graph& g, std::size_t k) {
  if (k == 0) return std::vector<Vertex>{};
  std::vector<Vertex> clique;
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nv = g.neighbors(v);
    cand.assign(std::upper_bound(nv.begin(), nv.end(), v), nv.end());
    if (cand.size() + 1 < k) continue;
    clique.assign(1, v);
    if (dfs_clique(g, k, clique, cand)) return clique;
  }
  return std::nullopt;
}

}  // namespace udg
