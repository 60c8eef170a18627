#pragma once

#include <cstddef>
#include <map>
#include <string>

namespace udg::harness {

struct CitedValue {
  double value = 0.0;
  std::string source;
};

/// Published reference values; experiments report against them and never
/// derive them.
struct TheoryConstants {
  CitedValue t0;                           // plane realizability at p = c/n fails w.h.p. for c > t0
  std::map<std::size_t, CitedValue> c_d;   // same for R^d, d = 3..8
  CitedValue one_d_lower;                  // 3^{1/3}
  CitedValue one_d_upper;                  // 12^{1/3}
  CitedValue one_d_exact;                  // (6 ln 2)^{1/3}
  CitedValue kappa;                        // 4.36
  CitedValue four_color_share;             // 4 / kappa = 0.917
};

const TheoryConstants& reference_table();

}  // namespace udg::harness
