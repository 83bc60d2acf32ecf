// Solves the two-ring problem for the rings (1, 0) and (2, 0.5) across the
// hyperbolic-cap threshold and prints the first-integral constant.
#include <iostream>

#include "lcmc/lcmc.hpp"

int main() {
  const lcmc::RingPair rings{1.0, 2.0, 0.0, 0.5};
  const double H0 = lcmc::threshold_H0(lcmc::validate_rings(rings));
  std::cout << "H0 = " << lcmc::format_double(H0) << '\n';
  for (double H : {0.0, 0.5 * H0, H0, 2.0 * H0}) {
    const auto sol = lcmc::solve_plateau(rings, H);
    const auto flux = lcmc::flux_numeric(rings.r, sol.curve);
    std::cout << "H = " << lcmc::format_double(H) << "  c = " << lcmc::format_double(sol.c)
              << "  regime = " << lcmc::to_string(sol.regime) << "  flux = " << lcmc::format_double(flux.flux)
              << '\n';
  }
}
