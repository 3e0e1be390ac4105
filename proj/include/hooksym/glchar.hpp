#ifndef HOOKSYM_GLCHAR_HPP
#define HOOKSYM_GLCHAR_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "partitions.hpp"
#include "polyring.hpp"
#include "symfun.hpp"

namespace hooksym {

/// Raised when a Laurent polynomial is not a nonnegative combination of
/// irreducible GL characters.
class NonCharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (virtual) rational GL_l character: a symmetric Laurent polynomial in
/// x_1..x_l (kind X, indices 0..l-1).
struct GlCharacter {
  std::size_t rank = 0;
  LaurentPoly poly;
};

namespace detail {

using ExponentVector = std::vector<int>;

/// Character stored by dense exponent vectors, lex-largest first.
using DenseCharacter = std::map<ExponentVector, Integer, std::greater<>>;

inline bool weakly_decreasing(const ExponentVector& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

/// Weight multiplicities of V^λ_l.
inline DenseCharacter dense_character(const GeneralizedPartition& lam) {
  const std::size_t l = lam.length();
  const int shift = lam.last();
  DenseCharacter out;
  for_each_skew_ssyt_content(SkewShape(lam.shifted(-shift).to_partition(), Partition{}), l,
                             [&](const std::vector<int>& content) {
                               ExponentVector w(content);
                               for (auto& e : w) e += shift;
                               out[w] += 1;
                             });
  return out;
}

inline void add_scaled(DenseCharacter& acc, const DenseCharacter& c, const Integer& k) {
  for (const auto& [w, m] : c) {
    auto [it, inserted] = acc.try_emplace(w, m * k);
    if (!inserted) {
      it->second += m * k;
      if (it->second == 0) acc.erase(it);
    }
  }
}

inline DenseCharacter multiply(const DenseCharacter& a, const DenseCharacter& b) {
  DenseCharacter out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      ExponentVector w(wa);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
      out[w] += ma * mb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Concatenated weights (a|b) of an outer tensor product.
inline DenseCharacter concatenate(const DenseCharacter& a, const DenseCharacter& b) {
  DenseCharacter out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      ExponentVector w(wa);
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace(std::move(w), ma * mb);
    }
  return out;
}

inline DenseCharacter to_dense(const LaurentPoly& p, std::size_t rank) {
  DenseCharacter out;
  for (const auto& [m, c] : p.terms()) {
    ExponentVector w(rank, 0);
    for (const auto& [v, e] : m.factors()) {
      if (v.kind != VarKind::X || v.index >= rank)
        throw std::invalid_argument("GL character contains variable " + v.name() + " outside x1..x" + std::to_string(rank));
      w[v.index] = e;
    }
    out.emplace(std::move(w), c);
  }
  return out;
}

inline LaurentPoly to_poly(const DenseCharacter& d) {
  LaurentPoly out;
  for (const auto& [w, c] : d) {
    std::vector<Monomial::Factor> f;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i]) f.emplace_back(VarId{VarKind::X, static_cast<std::uint32_t>(i)}, w[i]);
    out.add_term(Monomial(std::move(f)), c);
  }
  return out;
}

/// Peels irreducible characters off the lex-largest term.  `blocks` splits
/// the variables into consecutive groups; each peeled term is the outer
/// product of one irreducible per group.
inline std::map<std::vector<GeneralizedPartition>, Integer> peel(DenseCharacter c,
                                                                  const std::vector<std::size_t>& blocks) {
  std::map<std::vector<GeneralizedPartition>, Integer> out;
  while (!c.empty()) {
    const ExponentVector lead = c.begin()->first;
    const Integer mult = c.begin()->second;
    std::vector<GeneralizedPartition> key;
    DenseCharacter irreducible;
    std::size_t offset = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      ExponentVector part(lead.begin() + static_cast<std::ptrdiff_t>(offset),
                          lead.begin() + static_cast<std::ptrdiff_t>(offset + blocks[b]));
      offset += blocks[b];
      if (!weakly_decreasing(part)) throw NonCharacter("leading weight " + to_string(lead) + " is not dominant");
      key.emplace_back(part);
      irreducible = b == 0 ? dense_character(key.back()) : concatenate(irreducible, dense_character(key.back()));
    }
    if (mult < 0) throw NonCharacter("negative multiplicity " + mult.str() + " at " + to_string(lead));
    out.emplace(key, mult);
    add_scaled(c, irreducible, -mult);
  }
  return out;
}

}  // namespace detail

/// Character of the irreducible GL_l-module V^λ_l:
/// (x_1⋯x_l)^{λ_l} · s_{λ − λ_l·1_l}(x_1..x_l).
inline GlCharacter gl_character(const GeneralizedPartition& lam) {
  if (lam.length() == 0) throw std::invalid_argument("gl_character: rank must be at least 1");
  return GlCharacter{lam.length(), detail::to_poly(detail::dense_character(lam))};
}

/// The multiplicities m_λ with c = Σ m_λ·ch V^λ_l.
///
/// Repeatedly takes the lexicographically largest monomial x^α, records
/// λ = α with its coefficient and subtracts that multiple of ch V^λ_l.  Each
/// subtraction removes the current leading term, so the loop terminates.
inline std::map<GeneralizedPartition, Integer> decompose_character(const GlCharacter& c) {
  std::map<GeneralizedPartition, Integer> out;
  for (auto& [key, m] : detail::peel(detail::to_dense(c.poly, c.rank), {c.rank})) out.emplace(key.front(), m);
  return out;
}

namespace detail {

struct LrSearch {
  const Partition& mu;
  const Partition& nu;
  std::size_t max_rows;
  std::map<Partition, Integer> result;

  std::vector<int> lam;                   // row widths chosen so far
  std::vector<std::vector<int>> entries;  // entries[i][j - mu_i], 0-based letters
  std::vector<int> used;                  // letters placed in the rows above

  void row(std::size_t i) {
    if (i == max_rows) {
      for (std::size_t k = 0; k < nu.length(); ++k)
        if (used[k] != nu[k]) return;
      result[Partition(lam)] += 1;
      return;
    }
    std::vector<int> counts(std::min(i + 1, nu.length()), 0);
    choose(i, 0, counts);
  }

  void choose(std::size_t i, std::size_t k, std::vector<int>& counts) {
    if (k == counts.size()) {
      place_row(i, counts);
      return;
    }
    // Lattice condition: #k through this row ≤ #(k−1) through the rows above
    // (this row is read right to left, so its k's come before its (k−1)'s).
    int cap = nu[k] - used[k];
    if (k > 0) cap = std::min(cap, used[k - 1] - used[k]);
    for (int c = 0; c <= cap; ++c) {
      counts[k] = c;
      choose(i, k + 1, counts);
    }
    counts[k] = 0;
  }

  void place_row(std::size_t i, const std::vector<int>& counts) {
    std::vector<int> row_entries;
    for (std::size_t k = 0; k < counts.size(); ++k)
      row_entries.insert(row_entries.end(), static_cast<std::size_t>(counts[k]), static_cast<int>(k));
    const int width = mu[i] + static_cast<int>(row_entries.size());
    if (i > 0 && width > lam[i - 1]) return;
    if (i > 0) {
      for (int j = std::max(mu[i], mu[i - 1]); j < width; ++j) {
        int above = entries[i - 1][static_cast<std::size_t>(j - mu[i - 1])];
        if (row_entries[static_cast<std::size_t>(j - mu[i])] <= above) return;
      }
    }
    lam.push_back(width);
    entries.push_back(std::move(row_entries));
    for (std::size_t k = 0; k < counts.size(); ++k) used[k] += counts[k];
    row(i + 1);
    for (std::size_t k = 0; k < counts.size(); ++k) used[k] -= counts[k];
    entries.pop_back();
    lam.pop_back();
  }
};

}  // namespace detail

/// Littlewood–Richardson coefficients: s_μ·s_ν = Σ_λ c^λ_{μν} s_λ.
///
/// Counts fillings of λ/μ with content ν that are semistandard and whose
/// right-to-left, top-to-bottom reading word is a lattice word.  Rows are
/// filled top to bottom, so the lattice and column conditions prune early.
inline std::map<Partition, Integer> lr_coefficients(const Partition& mu, const Partition& nu) {
  if (nu.empty()) return {{mu, 1}};
  detail::LrSearch s{mu, nu, mu.length() + nu.length(), {}, {}, {}, std::vector<int>(nu.length(), 0)};
  s.row(0);
  return std::move(s.result);
}

/// c^λ_{μν} with s_μ(x)·s_ν(x^{-1}) = Σ_λ c^λ_{μν} ch V^λ_l over generalized
/// partitions of length l, i.e. V^μ_l ⊗ (V^ν_l)*.
inline std::map<GeneralizedPartition, Integer> mixed_tensor_coefficients(const Partition& mu, const Partition& nu,
                                                                         std::size_t rank) {
  if (mu.length() > rank || nu.length() > rank)
    throw std::invalid_argument("mixed_tensor_coefficients: partition longer than the rank");
  auto product = detail::multiply(detail::dense_character(GeneralizedPartition::of(mu, rank)),
                                  detail::dense_character(GeneralizedPartition::of(nu, rank).dual()));
  std::map<GeneralizedPartition, Integer> out;
  for (auto& [key, m] : detail::peel(std::move(product), {rank})) out.emplace(key.front(), m);
  return out;
}

/// b^λ_{μν}: restriction of V^λ_{l+r} to gl_l × gl_r, computed by splitting
/// the variables and peeling both blocks.
inline std::map<std::pair<GeneralizedPartition, GeneralizedPartition>, Integer> branching_gl_sum(
    const GeneralizedPartition& lam, std::size_t l, std::size_t r) {
  if (lam.length() != l + r) throw std::invalid_argument("branching_gl_sum: rank mismatch");
  std::map<std::pair<GeneralizedPartition, GeneralizedPartition>, Integer> out;
  for (auto& [key, m] : detail::peel(detail::dense_character(lam), {l, r})) out.emplace(std::make_pair(key[0], key[1]), m);
  return out;
}

/// Evaluation at x_i = 1: the dimension of a character.
inline Integer dimension(const GlCharacter& c) {
  Integer d = 0;
  for (const auto& [m, k] : c.poly.terms()) d += k;
  return d;
}

}  // namespace hooksym

#endif  // HOOKSYM_GLCHAR_HPP
