// Prints HS_lambda(x1,x2; y1,y2) for every partition of size at most 3.

#include <iostream>

#include <hooksym/format.hpp>
#include <hooksym/symfun.hpp>

int main() {
  using namespace hooksym;
  const auto x = alphabet(VarKind::X, 2), y = alphabet(VarKind::Y, 2);
  for (const auto& lam : enumerate_partitions(3, 3))
    std::cout << to_string(lam) << ": " << render(hook_schur_tableau(lam, x, y)) << "\n";
}
