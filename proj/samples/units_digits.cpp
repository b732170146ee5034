// Prints the exact units-digit distribution of triangular numbers in a few
// bases, then the congruence cases that explain the base-3 gap.

#include <iostream>

#include "trinum/trinum.hpp"

int main() {
  for (unsigned b : {3u, 4u, 8u, 10u, 16u}) {
    const auto profile = trinum::residue_profile(trinum::BaseSpec(b));
    std::cout << "base " << b << ":";
    for (unsigned d = 0; d < b; ++d) std::cout << ' ' << d << '(' << trinum::to_fraction_string(profile.frequency[d]) << ')';
    std::cout << (trinum::classify(trinum::BaseSpec(b)).gappy ? "  gappy" : "  no gaps") << '\n';
  }

  std::cout << '\n' << trinum::render_transcript(trinum::enumerate_cases(trinum::BaseSpec(3)), trinum::Notation::Unicode);

  // Residues of enormous indices never need S_n itself.
  const auto n = trinum::Natural::parse("123456789012345678901234567890123456789");
  std::cout << "\nS_n mod 10 for n = " << n << ": " << trinum::tri_mod(n, trinum::BaseSpec(10)) << '\n';
}
