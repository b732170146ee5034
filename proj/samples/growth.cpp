// Compares the three dividing-cell dynamics and their fitted power-law exponents.

#include <cstdio>

#include "trinum/trinum.hpp"

int main() {
  using trinum::DividingDynamics;
  const DividingDynamics kinds[] = {DividingDynamics::linear_growth(), DividingDynamics::constant(1),
                                    DividingDynamics::linear_decline(2000, 1)};
  for (const auto& dyn : kinds) {
    const auto trace = trinum::simulate(dyn, 1000);
    const auto fit = trinum::fit_power_law(trace, {500, 1000});
    std::printf("%-14s N(1000)=%-8s exponent=%.4f residual=%.2e\n", dyn.str().c_str(),
                trace.total.back().str().c_str(), fit.exponent, fit.residual);
  }
}
