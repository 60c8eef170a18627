#include "udg/induced.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "bits.hpp"
#include "udg/errors.hpp"

namespace udg {

namespace {

// Enumerates chordless paths s = v0, v1, ..., vj whose vertices all exceed s
// and whose interior avoids N(s); a chordless path closes into an induced
// cycle through a final vertex adjacent to both vj and s. Each cycle is
// therefore rooted at its smallest vertex.
class CycleSearch {
 public:
  // nodes_per_root == 0 means exhaustive.
  CycleSearch(const Graph& g, const std::vector<bool>& allowed, std::size_t nodes_per_root = 0)
      : adj_(g), allowed_(allowed), nodes_per_root_(nodes_per_root) {
    for (std::size_t len = 0; len < allowed_.size() && len <= g.order(); ++len) {
      if (allowed_[len] && len >= 3) max_len_ = len;
    }
  }

  std::optional<InducedCycle> run() {
    const std::size_t n = adj_.order();
    const std::size_t w = adj_.words();
    if (max_len_ == 0) return std::nullopt;
    frames_.assign(n + 2, std::vector<bits::Word>(w, 0));
    greater_.assign(w, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (n - s <= best_len_) break;
      source_ = static_cast<Vertex>(s);
      nodes_ = 0;
      std::fill(greater_.begin(), greater_.end(), 0);
      for (std::size_t v = s + 1; v < n; ++v) bits::set(greater_, v);
      const auto ns = adj_.row(s);
      for (std::size_t v1 = bits::next_set(ns, s + 1); v1 < w * 64; v1 = bits::next_set(ns, v1 + 1)) {
        path_.assign({source_, static_cast<Vertex>(v1)});
        auto& f = frames_[1];
        std::fill(f.begin(), f.end(), 0);
        bits::set(f, s);
        bits::set(f, v1);
        extend(1);
      }
    }
    if (best_len_ == 0) return std::nullopt;
    return normalize(best_cycle_);
  }

 private:
  void extend(std::size_t j) {
    if (nodes_per_root_ != 0 && ++nodes_ > nodes_per_root_) return;
    const std::size_t w = adj_.words();
    const auto& forbidden = frames_[j];
    const auto ns = adj_.row(source_);
    const auto nj = adj_.row(path_[j]);

    std::size_t open = 0;
    bool can_close = false;
    for (std::size_t k = 0; k < w; ++k) {
      const bits::Word avail = greater_[k] & ~forbidden[k];
      open += static_cast<std::size_t>(std::popcount(avail & ~ns[k]));
      can_close = can_close || (avail & ns[k]) != 0;
    }
    if (!can_close) return;
    const std::size_t bound = std::min(j + 2 + open, max_len_);
    if (bound < best_len_ || (bound == best_len_ && !ties_matter())) return;

    auto& next = frames_[j + 1];
    for (std::size_t k = 0; k < w; ++k) next[k] = forbidden[k] | nj[k];
    for (std::size_t x = 0; x < w * 64;) {
      x = next_candidate(forbidden, nj, x);
      if (x >= w * 64) break;
      const auto wv = static_cast<Vertex>(x);
      if (bits::test(ns, x)) {
        record(wv, j + 2);
      } else if (j + 2 < max_len_) {
        path_.push_back(wv);
        extend(j + 1);
        path_.pop_back();
      }
      ++x;
    }
  }

  std::size_t next_candidate(const std::vector<bits::Word>& forbidden, std::span<const bits::Word> nj,
                             std::size_t from) const {
    const std::size_t w = adj_.words();
    std::size_t k = from >> 6;
    if (k >= w) return w * 64;
    bits::Word word = (greater_[k] & ~forbidden[k] & nj[k]) & (~bits::Word{0} << (from & 63));
    while (true) {
      if (word) return k * 64 + static_cast<std::size_t>(std::countr_zero(word));
      if (++k == w) return w * 64;
      word = greater_[k] & ~forbidden[k] & nj[k];
    }
  }

  bool ties_matter() const { return !best_set_.empty() && best_set_.front() == source_; }

  void record(Vertex closer, std::size_t len) {
    if (len >= allowed_.size() || !allowed_[len]) return;
    std::vector<Vertex> cyc = path_;
    cyc.push_back(closer);
    std::vector<Vertex> set = cyc;
    std::sort(set.begin(), set.end());
    if (len > best_len_ || (len == best_len_ && set < best_set_)) {
      best_len_ = len;
      best_set_ = std::move(set);
      best_cycle_ = std::move(cyc);
    }
  }

  static InducedCycle normalize(std::vector<Vertex> cyc) {
    // cyc[0] is the minimum; orient towards the smaller neighbor.
    if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    return {cyc.size(), std::move(cyc)};
  }

  bits::Matrix adj_;
  const std::vector<bool>& allowed_;
  std::size_t nodes_per_root_;
  std::size_t nodes_ = 0;
  std::size_t max_len_ = 0;
  std::vector<std::vector<bits::Word>> frames_;
  std::vector<bits::Word> greater_;
  std::vector<Vertex> path_;
  Vertex source_ = 0;
  std::size_t best_len_ = 0;
  std::vector<Vertex> best_set_;
  std::vector<Vertex> best_cycle_;
};

// Does the induced graph on `chosen` embed into `pattern` as an induced subgraph?
class PatternEmbedder {
 public:
  explicit PatternEmbedder(const Graph& pattern) : k_(pattern.order()), masks_(k_, 0), degree_(k_) {
    for (Vertex x = 0; x < k_; ++x) {
      degree_[x] = pattern.degree(x);
      for (Vertex y : pattern.neighbors(x)) masks_[x] |= 1U << y;
    }
  }

  bool embeds(const Graph& g, const std::vector<Vertex>& chosen) {
    const std::size_t m = chosen.size();
    local_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (g.adjacent(chosen[i], chosen[j])) {
          local_[i] |= 1U << j;
          local_[j] |= 1U << i;
        }
      }
    }
    map_.assign(m, 0);
    return place(0, 0);
  }

 private:
  bool place(std::size_t i, std::uint32_t used) {
    if (i == local_.size()) return true;
    const auto local_degree = static_cast<std::size_t>(std::popcount(local_[i]));
    for (Vertex x = 0; x < k_; ++x) {
      if ((used >> x) & 1U) continue;
      if (degree_[x] < local_degree) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const bool in_g = (local_[i] >> j) & 1U;
        const bool in_h = (masks_[x] >> map_[j]) & 1U;
        ok = in_g == in_h;
      }
      if (!ok) continue;
      map_[i] = x;
      if (place(i + 1, used | (1U << x))) return true;
    }
    return false;
  }

  std::size_t k_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::size_t> degree_;
  std::vector<std::uint32_t> local_;
  std::vector<Vertex> map_;
};

bool choose(const Graph& g, std::size_t target, PatternEmbedder& embedder, std::vector<Vertex>& chosen,
            Vertex from) {
  if (chosen.size() == target) return true;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex v = from; v < n; ++v) {
    if (n - v < target - chosen.size()) return false;
    chosen.push_back(v);
    if (embedder.embeds(g, chosen) && choose(g, target, embedder, chosen, v + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), map_(h.order(), kNone), inverse_(g.order(), kNone) {
    // Visit h in BFS order from a maximum-degree vertex of each component so
    // that most placements are constrained by an already-mapped neighbor.
    std::vector<char> seen(h.order(), 0);
    std::vector<Vertex> roots(h.order());
    for (Vertex v = 0; v < h.order(); ++v) roots[v] = v;
    std::stable_sort(roots.begin(), roots.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    for (Vertex r : roots) {
      if (seen[r]) continue;
      seen[r] = 1;
      const std::size_t head0 = order_.size();
      order_.push_back(r);
      for (std::size_t head = head0; head < order_.size(); ++head) {
        for (Vertex w : h.neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (place(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kNone = ~Vertex{0};

  bool consistent(Vertex x, Vertex c) const {
    if (g_.degree(c) != h_.degree(x)) return false;
    std::size_t mapped_h = 0;
    for (Vertex y : h_.neighbors(x)) {
      if (map_[y] == kNone) continue;
      ++mapped_h;
      if (!g_.adjacent(c, map_[y])) return false;
    }
    std::size_t mapped_g = 0;
    for (Vertex z : g_.neighbors(c)) {
      if (inverse_[z] != kNone) ++mapped_g;
    }
    return mapped_g == mapped_h;
  }

  bool try_candidate(std::size_t i, Vertex x, Vertex c) {
    if (inverse_[c] != kNone || !consistent(x, c)) return false;
    map_[x] = c;
    inverse_[c] = x;
    if (place(i + 1)) return true;
    map_[x] = kNone;
    inverse_[c] = kNone;
    return false;
  }

  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex x = order_[i];
    Vertex anchor = kNone;
    for (Vertex y : h_.neighbors(x)) {
      if (map_[y] != kNone) {
        anchor = map_[y];
        break;
      }
    }
    if (anchor != kNone) {
      const auto cands = g_.neighbors(anchor);
      for (Vertex c : cands) {
        if (try_candidate(i, x, c)) return true;
      }
    } else {
      for (Vertex c = 0; c < g_.order(); ++c) {
        if (try_candidate(i, x, c)) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<Vertex> inverse_;
};

std::vector<bool> parity_mask(std::size_t n, CycleParity parity) {
  std::vector<bool> allowed(n + 1, false);
  for (std::size_t len = 3; len <= n; ++len) {
    allowed[len] = parity == CycleParity::Any || (parity == CycleParity::Odd) == (len % 2 == 1);
  }
  return allowed;
}

void check_budget(const Graph& g, std::size_t budget, const char* what) {
  if (g.order() > budget) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.order()) +
                         " vertices exceed the induced-search budget of " + std::to_string(budget));
  }
}

}  // namespace

std::optional<InducedCycle> largest_induced_cycle(const Graph& g, CycleParity parity, std::size_t budget) {
  return largest_induced_cycle(g, parity_mask(g.order(), parity), budget);
}

std::optional<InducedCycle> largest_induced_cycle(const Graph& g, const std::vector<bool>& allowed,
                                                  std::size_t budget) {
  check_budget(g, budget, "largest_induced_cycle");
  return CycleSearch(g, allowed).run();
}

std::optional<InducedCycle> induced_cycle_heuristic(const Graph& g, const std::vector<bool>& allowed,
                                                    std::size_t nodes_per_root) {
  if (nodes_per_root == 0) throw InvalidInput("induced_cycle_heuristic needs a positive node limit");
  return CycleSearch(g, allowed, nodes_per_root).run();
}

std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& h, std::size_t budget) {
  if (h.order() > kMaxPatternOrder) {
    throw BudgetExceeded("contains_induced: pattern has " + std::to_string(h.order()) + " vertices, limit is " +
                         std::to_string(kMaxPatternOrder));
  }
  check_budget(g, budget, "contains_induced");
  if (h.order() > g.order()) return std::nullopt;
  PatternEmbedder embedder(h);
  std::vector<Vertex> chosen;
  if (choose(g, h.order(), embedder, chosen, 0)) return chosen;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<std::size_t> dg(g.order());
  std::vector<std::size_t> dh(h.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  return IsoSearch(g, h).run();
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

}  // namespace udg
