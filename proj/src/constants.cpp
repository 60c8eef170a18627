#include "udg/constants.hpp"

#include <cmath>

namespace udg::harness {

namespace {

TheoryConstants build() {
  TheoryConstants t;
  t.t0 = {14.797, "lower threshold constant: G(n, c/n) is not a plane distance graph w.h.p. for c > t0"};
  const std::string cd = "lower threshold constant: G(n, c/n) is not a distance graph in R^d w.h.p. for c > c_d";
  t.c_d = {{3, {55.272, cd}},   {4, {164.528, cd}},  {5, {504.285, cd}},
           {6, {1365.170, cd}}, {7, {3624.758, cd}}, {8, {8675.785, cd}}};
  t.one_d_lower = {std::cbrt(3.0), "line threshold bracket, lower end of p n^{4/3}"};
  t.one_d_upper = {std::cbrt(12.0), "line threshold bracket, upper end of p n^{4/3}"};
  t.one_d_exact = {std::cbrt(6.0 * std::log(2.0)), "exact line threshold constant of p n^{4/3}"};
  t.kappa = {4.36, "plane distance graphs keep at least kn/kappa vertices in a k-colorable induced subgraph"};
  t.four_color_share = {0.917, "share of vertices kept by a 4-colorable induced subgraph, 4/kappa"};
  return t;
}

}  // namespace

const TheoryConstants& reference_table() {
  static const TheoryConstants table = build();
  return table;
}

}  // namespace udg::harness
