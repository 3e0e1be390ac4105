// Decomposes L(Lambda(1,0)) tensor L(Lambda(-1)) and checks it against the
// restriction of gl(3) modules to gl(2) x gl(1).

#include <iostream>

#include <hooksym/tensorprod.hpp>

int main() {
  using namespace hooksym;
  const int bound = 8;
  const auto dec = tensor_decompose(GeneralizedPartition{1, 0}, 2, GeneralizedPartition{-1}, 1, bound);
  for (const auto& [kappa, term] : dec.terms)
    std::cout << to_string(kappa) << "  multiplicity " << term.multiplicity.str() << "  (lambda " << to_string(term.lambda)
              << ", d " << term.d << ")\n";
  const auto bad = tensor_branching_mismatches(dec);
  std::cout << (bad.empty() ? "restriction check passed" : "restriction check failed") << "\n";
  return bad.empty() ? 0 : 1;
}
