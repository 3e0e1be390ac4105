#ifndef HOOKSYM_TENSORPROD_HPP
#define HOOKSYM_TENSORPROD_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "glchar.hpp"
#include "integer.hpp"
#include "partitions.hpp"

namespace hooksym {

/// One summand L(Λ(λ − d·1)) together with the LR data that produced it.
struct TensorTerm {
  Partition lambda;
  int d = 0;
  Integer multiplicity;
};

/// Truncated decomposition of L(Λ(μ)) ⊗ L(Λ(ν)) at levels l and r.
struct TensorDecomposition {
  GeneralizedPartition left;
  std::size_t l = 0;
  GeneralizedPartition right;
  std::size_t r = 0;
  int bound = 0;
  std::map<GeneralizedPartition, TensorTerm> terms;  // keyed by λ − d·1_{l+r}
};

/// Sums ã^{μ+d1_l, ν+d1_r}_λ · L(Λ(λ − d·1_{l+r})) over pairs (λ, d) with
/// λ a partition of length ≤ l+r, d ≥ 0, μ+d1_l and ν+d1_r partitions, and
/// λ_{l+r} = 0 whenever d > 0.  Only |λ| ≤ bound and d ≤ bound are kept.
inline TensorDecomposition tensor_decompose(const GeneralizedPartition& mu, std::size_t l,
                                            const GeneralizedPartition& nu, std::size_t r, int bound) {
  if (mu.length() != l || nu.length() != r) throw std::invalid_argument("tensor_decompose: length does not match level");
  if (l < 1 || r < 1) throw std::invalid_argument("tensor_decompose: levels must be positive");
  if (bound < 0) throw std::invalid_argument("tensor_decompose: negative bound");
  TensorDecomposition out{mu, l, nu, r, bound, {}};
  const std::size_t rank = l + r;
  for (int d = std::max({0, -mu.last(), -nu.last()}); d <= bound; ++d) {
    const Partition a = mu.shifted(d).to_partition(), b = nu.shifted(d).to_partition();
    if (a.size() + b.size() > bound) break;
    for (const auto& [lam, mult] : lr_coefficients(a, b)) {
      if (lam.length() > rank) throw std::logic_error("tensor_decompose: LR shape longer than l + r");
      if (d > 0 && lam.length() == rank) continue;
      GeneralizedPartition kappa = GeneralizedPartition::of(lam, rank).shifted(-d);
      if (out.terms.count(kappa))
        throw std::logic_error("tensor_decompose: weight " + to_string(kappa) + " produced twice");
      out.terms.emplace(kappa, TensorTerm{lam, d, mult});
    }
  }
  return out;
}

struct TensorMismatch {
  GeneralizedPartition weight;
  Integer expected;  // branching multiplicity
  Integer actual;    // emitted multiplicity
};

/// Compares every emitted multiplicity with the branching number b^κ_{μν}
/// (restriction of V^κ_{l+r} to gl_l × gl_r) over all κ inside the bound.
/// Returns the mismatches in ascending order of κ.
inline std::vector<TensorMismatch> tensor_branching_mismatches(const TensorDecomposition& dec) {
  std::vector<TensorMismatch> out;
  const int rank = static_cast<int>(dec.l + dec.r);
  const auto key = std::make_pair(dec.left, dec.right);
  std::size_t seen = 0;
  for (const auto& kappa : enumerate_generalized(dec.bound, rank)) {
    const int d = std::max(0, -kappa.last());
    if (d > dec.bound || kappa.shifted(d).sum() > dec.bound) continue;
    const auto b = branching_gl_sum(kappa, dec.l, dec.r);
    auto it = b.find(key);
    const Integer expected = it == b.end() ? Integer(0) : it->second;
    auto found = dec.terms.find(kappa);
    const Integer actual = found == dec.terms.end() ? Integer(0) : found->second.multiplicity;
    if (found != dec.terms.end()) ++seen;
    if (expected != actual) out.push_back({kappa, expected, actual});
  }
  if (seen != dec.terms.size()) {
    for (const auto& [kappa, term] : dec.terms) {
      const int d = std::max(0, -kappa.last());
      bool inside = std::all_of(kappa.parts().begin(), kappa.parts().end(),
                                [&](int p) { return p >= -dec.bound && p <= dec.bound; }) &&
                    d <= dec.bound && kappa.shifted(d).sum() <= dec.bound;
      if (!inside) out.push_back({kappa, 0, term.multiplicity});
    }
  }
  return out;
}

inline bool verify_tensor_against_branching(const GeneralizedPartition& mu, std::size_t l,
                                            const GeneralizedPartition& nu, std::size_t r, int bound) {
  return tensor_branching_mismatches(tensor_decompose(mu, l, nu, r, bound)).empty();
}

}  // namespace hooksym

#endif  // HOOKSYM_TENSORPROD_HPP
