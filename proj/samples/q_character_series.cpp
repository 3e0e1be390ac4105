// q-characters of the level-one modules and their two-row product form.

#include <iostream>

#include <hooksym/format.hpp>
#include <hooksym/superchar.hpp>

int main() {
  using namespace hooksym;
  const HalfInt order = HalfInt::whole(4);
  for (int lam = -2; lam <= 2; ++lam) {
    const GeneralizedPartition gp{lam};
    std::cout << "lambda = " << lam << ", h = " << h_of(gp).str() << "\n";
    std::cout << "  ch_q = " << render(q_character(gp, order)) << "\n";
    std::cout << "  two-row sum equals product: " << (q_identity_lhs(lam, order) == q_identity_rhs(lam, order) ? "yes" : "no")
              << "\n";
  }
}
