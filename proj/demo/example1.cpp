// Expands the long-root hybrid character of G2 with highest weight (2,2),
// checks it against the group-algebra identity, and prints both dimensions.

#include <iostream>

#include <hybridweyl/hybridweyl.hpp>

int main() {
  using namespace hybridweyl;
  const RootSystemData g2 = build_root_system(AlgebraLabel(Family::G, 2));
  const Weight lambda{2, 2};

  const HybridExpansion exp = hybrid_expansion(g2, Kind::long_roots, lambda);
  for (auto it = exp.coefficients.rbegin(); it != exp.coefficients.rend(); ++it)
    std::cout << it->second << " * C" << it->first.str() << "\n";

  std::cout << "verified: " << std::boolalpha << static_cast<bool>(verify_expansion(g2, exp)) << "\n";
  std::cout << "hybrid dimension: " << hybrid_dimension(g2, Kind::long_roots, lambda) << "\n";
  std::cout << "sum of coeff * |W.nu|: " << expansion_dimension(g2, exp) << "\n";
}
