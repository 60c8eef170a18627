#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "udg/graph.hpp"

namespace udg::bits {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline void set(std::span<Word> s, std::size_t i) { s[i >> 6] |= Word{1} << (i & 63); }
inline void reset(std::span<Word> s, std::size_t i) { s[i >> 6] &= ~(Word{1} << (i & 63)); }
inline bool test(std::span<const Word> s, std::size_t i) { return (s[i >> 6] >> (i & 63)) & 1U; }

inline std::size_t count(std::span<const Word> s) {
  std::size_t c = 0;
  for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool any(std::span<const Word> s) {
  for (Word w : s) {
    if (w) return true;
  }
  return false;
}

/// Index of the lowest set bit at or after `from`, or s.size()*64.
inline std::size_t next_set(std::span<const Word> s, std::size_t from) {
  std::size_t wi = from >> 6;
  if (wi >= s.size()) return s.size() * 64;
  Word w = s[wi] & (~Word{0} << (from & 63));
  while (true) {
    if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == s.size()) return s.size() * 64;
    w = s[wi];
  }
}

/// Dense adjacency rows, one bitset per vertex.
class Matrix {
 public:
  explicit Matrix(const Graph& g) : n_(g.order()), w_(words_for(g.order())), data_(n_ * w_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.neighbors(u)) set(row_mut(u), v);
    }
  }

  std::size_t order() const { return n_; }
  std::size_t words() const { return w_; }
  std::span<const Word> row(std::size_t v) const { return {data_.data() + v * w_, w_}; }

 private:
  std::span<Word> row_mut(std::size_t v) { return {data_.data() + v * w_, w_}; }

  std::size_t n_;
  std::size_t w_;
  std::vector<Word> data_;
};

}  // namespace udg::bits
