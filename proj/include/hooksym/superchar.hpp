#ifndef HOOKSYM_SUPERCHAR_HPP
#define HOOKSYM_SUPERCHAR_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "glchar.hpp"
#include "integer.hpp"
#include "partitions.hpp"
#include "polyring.hpp"
#include "series.hpp"
#include "symfun.hpp"

namespace hooksym {

/// A level-l highest weight of the infinite-rank superalgebra: the values Λ_s
/// on the diagonal units e_ss (s ∈ ½ℤ, stored doubled) and on the center.
struct Weight {
  std::map<int, int> entries;  // doubled index → Λ_s, zero values omitted
  int central_charge = 0;

  int value(HalfInt s) const {
    auto it = entries.find(s.twice());
    return it == entries.end() ? 0 : it->second;
  }
  void set(HalfInt s, int v) {
    if (v == 0)
      entries.erase(s.twice());
    else
      entries[s.twice()] = v;
  }
  bool operator==(const Weight&) const = default;
};

/// "{1/2: 3}, charge 1".
inline std::string to_string(const Weight& w) {
  std::string out = "{";
  bool first = true;
  for (const auto& [s, v] : w.entries) {
    if (!first) out += ", ";
    out += HalfInt::from_twice(s).str() + ": " + std::to_string(v);
    first = false;
  }
  return out + "}, charge " + std::to_string(w.central_charge);
}

namespace detail {

inline int clamp0(int k) { return k > 0 ? k : 0; }

}  // namespace detail

/// Λ(λ) for a generalized partition λ of length l:
///   Λ_i = ⟨λ'_i − i⟩ (i ≥ 1),  Λ_j = −⟨−λ'_j + j⟩ (j ≤ 0),
///   Λ_r = ⟨λ_{r+½} − (r−½)⟩ (r ≥ ½),  Λ_s = −⟨−λ_{l+s+½} + (s−½)⟩ (s ≤ −½),
/// with ⟨k⟩ = max(k, 0), parts outside 1..l read as 0, and central charge l.
inline Weight weight_of(const GeneralizedPartition& lam) {
  const int l = static_cast<int>(lam.length());
  if (l < 1) throw std::invalid_argument("weight_of: length must be at least 1");
  auto part = [&](int k) { return k >= 1 && k <= l ? lam[static_cast<std::size_t>(k - 1)] : 0; };
  Weight w;
  w.central_charge = l;
  for (int i = 1; i <= std::max(lam.first(), 0); ++i)
    w.set(HalfInt::whole(i), detail::clamp0(gen_column_length(lam, i) - i));
  for (int j = -l; j <= 0; ++j) w.set(HalfInt::whole(j), -detail::clamp0(-gen_column_length(lam, j) + j));
  for (int k = 1; k <= l; ++k) w.set(HalfInt::from_twice(2 * k - 1), detail::clamp0(part(k) - (k - 1)));
  // s = −½ − t reads the part λ_{l−t}.
  for (int t = 0; t < l; ++t) w.set(HalfInt::from_twice(-2 * t - 1), -detail::clamp0(-part(l - t) - 1 - t));
  return w;
}

/// h(λ) = Σ_r r·Λ(λ)_r.
inline HalfInt h_of(const GeneralizedPartition& lam) {
  int twice = 0;
  for (const auto& [s, v] : weight_of(lam).entries) twice += s * v;
  return HalfInt::from_twice(twice);
}

/// Truncated character Σ_{μ,ν} c^λ_{μν} HS_μ(z;y)·HS_ν(z⁻¹;y⁻¹) over
/// partitions μ, ν of length ≤ l with |μ| + |ν| ≤ trunc.  The inverse
/// alphabets are the formal variables of kinds Zinv and Yinv, and every
/// variable has degree 1.
inline LaurentPoly character(const GeneralizedPartition& lam, std::size_t z_size, std::size_t y_size, int trunc) {
  if (trunc < 0) throw std::invalid_argument("character: negative truncation");
  const std::size_t l = lam.length();
  if (l < 1) throw std::invalid_argument("character: length must be at least 1");
  const Truncation t{trunc, Grading::uniform()};
  const auto z = alphabet(VarKind::Z, z_size), y = alphabet(VarKind::Y, y_size);
  const auto zi = alphabet(VarKind::Zinv, z_size), yi = alphabet(VarKind::Yinv, y_size);
  const auto shapes = enumerate_partitions(trunc, static_cast<int>(l));
  std::map<Partition, LaurentPoly> front, back;
  for (const auto& p : shapes) {
    front.emplace(p, hook_schur_tableau(p, z, y, t));
    back.emplace(p, hook_schur_tableau(p, zi, yi, t));
  }
  LaurentPoly out(t);
  for (const auto& mu : shapes) {
    if (front.at(mu).is_zero()) continue;
    for (const auto& nu : shapes) {
      if (mu.size() + nu.size() > trunc) continue;
      if (back.at(nu).is_zero()) continue;
      auto coeffs = mixed_tensor_coefficients(mu, nu, l);
      auto it = coeffs.find(lam);
      if (it == coeffs.end()) continue;
      out += front.at(mu) * back.at(nu) * it->second;
    }
  }
  return out;
}

/// Σ_{a−b=λ} HS_(a)(z;y)·HS_(b)(z⁻¹;y⁻¹) with a + b ≤ trunc: the level-one
/// character in closed form.
inline LaurentPoly level_one_character(int lam, std::size_t z_size, std::size_t y_size, int trunc) {
  if (trunc < 0) throw std::invalid_argument("level_one_character: negative truncation");
  const Truncation t{trunc, Grading::uniform()};
  const auto z = alphabet(VarKind::Z, z_size), y = alphabet(VarKind::Y, y_size);
  const auto zi = alphabet(VarKind::Zinv, z_size), yi = alphabet(VarKind::Yinv, y_size);
  LaurentPoly out(t);
  for (int b = std::max(0, -lam); 2 * b + lam <= trunc; ++b) {
    const int a = b + lam;
    out += hook_schur_tableau(Partition{a}, z, y, t) * hook_schur_tableau(Partition{b}, zi, yi, t);
  }
  return out;
}

/// c^μ_λ: multiplicities in s_μ(x, x⁻¹)·Π_i(1 + x_i⁻¹) = Σ_λ c^μ_λ ch V^λ_l,
/// for a partition μ of length ≤ 2l.
inline std::map<GeneralizedPartition, Integer> restriction_coefficients(const Partition& mu, std::size_t l) {
  if (mu.length() > 2 * l) throw std::invalid_argument("restriction_coefficients: partition longer than 2l");
  detail::DenseCharacter folded;
  for (const auto& [w, m] : detail::dense_character(GeneralizedPartition::of(mu, 2 * l))) {
    detail::ExponentVector v(l);
    for (std::size_t i = 0; i < l; ++i) v[i] = w[i] - w[l + i];
    folded[v] += m;
  }
  detail::DenseCharacter exterior;
  for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
    detail::ExponentVector v(l, 0);
    for (std::size_t i = 0; i < l; ++i)
      if (mask >> i & 1) v[i] = -1;
    exterior[v] += 1;
  }
  std::map<GeneralizedPartition, Integer> out;
  for (auto& [key, m] : detail::peel(detail::multiply(folded, exterior), {l})) out.emplace(key.front(), m);
  return out;
}

namespace detail {

inline const std::map<GeneralizedPartition, Integer>& cached_restriction(const Partition& mu, std::size_t l) {
  static std::mutex lock;
  static std::map<std::pair<Partition, std::size_t>, std::map<GeneralizedPartition, Integer>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto key = std::make_pair(mu, l);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, restriction_coefficients(mu, l)).first;
  return it->second;
}

}  // namespace detail

/// q-character q^{−h(λ)}·Σ_μ c^μ_λ HS_μ(q^{1/2}, q^{3/2}, …; q, q², …) through
/// q^{order}.  The sum is formed through q^{order+h(λ)}; a tableau of shape μ
/// weighs at least |μ|/2, so |μ| ≤ 2(order + h(λ)) suffices.
inline HalfSeries q_character(const GeneralizedPartition& lam, HalfInt order) {
  if (order.twice() < 0) throw std::invalid_argument("q_character: negative order");
  const std::size_t l = lam.length();
  if (l < 1) throw std::invalid_argument("q_character: length must be at least 1");
  const HalfInt h = h_of(lam);
  const HalfInt top = order + h;
  HalfSeries sum(top);
  for (const auto& mu : enumerate_partitions(top.twice(), static_cast<int>(2 * l))) {
    HalfSeries hs = hook_schur_q(mu, top);
    if (hs.is_zero()) continue;
    const auto& coeffs = detail::cached_restriction(mu, l);
    auto it = coeffs.find(lam);
    if (it == coeffs.end()) continue;
    sum += hs * it->second;
  }
  return sum.shifted(-h);
}

inline HalfSeries q_character(const GeneralizedPartition& lam, int order) {
  return q_character(lam, HalfInt::whole(order));
}

/// Coefficient-wise comparison of two series at their common order.
struct SeriesMismatch {
  HalfInt exponent;
  Integer expected;
  Integer actual;
};

inline std::optional<SeriesMismatch> first_mismatch(const HalfSeries& expected, const HalfSeries& actual) {
  const HalfInt order = std::min(expected.order(), actual.order());
  for (int k = 0; k <= order.twice(); ++k) {
    const HalfInt e = HalfInt::from_twice(k);
    if (expected.coefficient(e) != actual.coefficient(e))
      return SeriesMismatch{e, expected.coefficient(e), actual.coefficient(e)};
  }
  return std::nullopt;
}

/// Left side of the two-row identity: Σ HS_μ(q^r; q^n) over partitions μ of
/// length ≤ 2 with μ₁ − μ₂ ≥ λ (λ ≥ 0) or μ₂ − μ₁ − 1 ≤ λ (λ < 0).
inline HalfSeries q_identity_lhs(int lam, HalfInt order) {
  const int gap = lam >= 0 ? lam : -lam - 1;
  HalfSeries out(order);
  for (const auto& mu : enumerate_partitions(order.twice(), 2))
    if (mu[0] - mu[1] >= gap) out += hook_schur_q(mu, order);
  return out;
}

/// Π_{r ∈ ½+ℤ₊} (1 + q^r)² / Π_{n ≥ 1} (1 − q^n)² through q^{order}.
inline HalfSeries fermion_boson_product(HalfInt order) {
  HalfSeries num = HalfSeries::one(order), den = HalfSeries::one(order);
  for (int k = 1; k <= order.twice(); k += 2) {
    HalfSeries f = HalfSeries::one(order);
    f.add(HalfInt::from_twice(k), 1);
    num *= f * f;
  }
  for (int k = 2; k <= order.twice(); k += 2) {
    HalfSeries f = HalfSeries::one(order);
    f.add(HalfInt::from_twice(k), -1);
    den *= f * f;
  }
  return num * series_inv_unit(den);
}

/// q^{λ/2}(1 + q^{λ+½})^{−1}·Π (λ ≥ 0) or q^{−(λ+1)/2}(1 + q^{−λ−½})^{−1}·Π (λ < 0).
inline HalfSeries q_identity_rhs(int lam, HalfInt order) {
  const int gap = lam >= 0 ? lam : -lam - 1;
  HalfSeries geometric = HalfSeries::one(order);
  geometric.add(HalfInt::from_twice(2 * gap + 1), 1);
  HalfSeries body = series_inv_unit(geometric) * fermion_boson_product(order);
  return body.shifted(HalfInt::from_twice(gap)).truncated(order);
}

// Level-one affine characters.

/// Weight of the integrable highest weight in the standard Borel: coefficients
/// of ε̃_i (i = 1..m), δ̃_j (j = 1..n), Λ̃₀ and δ̃.
struct AffineWeight {
  int m = 0;
  int n = 0;
  std::map<int, int> eps;
  std::map<int, int> delta_part;
  int lambda0 = 0;
  boost::rational<int> delta_imag{0};

  int eps_at(int i) const {
    auto it = eps.find(i);
    return it == eps.end() ? 0 : it->second;
  }
  int delta_at(int j) const {
    auto it = delta_part.find(j);
    return it == delta_part.end() ? 0 : it->second;
  }
  void add_eps(int i, int v) {
    if ((eps[i] += v) == 0) eps.erase(i);
  }
  void add_delta(int j, int v) {
    if ((delta_part[j] += v) == 0) delta_part.erase(j);
  }
  bool operator==(const AffineWeight&) const = default;
};

/// "e1 + e2 + 2*d1 + L0".
inline std::string to_string(const AffineWeight& w) {
  std::string out;
  auto term = [&](int c, const std::string& name) {
    if (c == 0) return;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
  };
  for (const auto& [i, c] : w.eps) term(c, "e" + std::to_string(i));
  for (const auto& [j, c] : w.delta_part) term(c, "d" + std::to_string(j));
  term(w.lambda0, "L0");
  if (w.delta_imag.numerator() != 0) {
    out += out.empty() ? "" : " + ";
    out += "(" + std::to_string(w.delta_imag.numerator()) + "/" + std::to_string(w.delta_imag.denominator()) + ")*d";
  }
  return out.empty() ? "0" : out;
}

/// The integrable highest weight Λ̃(λ):
///   ε̃₁+⋯+ε̃_λ+Λ̃₀ (0 ≤ λ ≤ m),  ε̃₁+⋯+ε̃_m+(λ−m)δ̃₁+Λ̃₀ (λ > m),  λδ̃_n+Λ̃₀ (λ < 0).
inline AffineWeight integrable_weight(int lam, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("integrable_weight: m and n must be positive");
  AffineWeight w;
  w.m = m;
  w.n = n;
  w.lambda0 = 1;
  if (lam >= 0) {
    for (int i = 1; i <= std::min(lam, m); ++i) w.add_eps(i, 1);
    if (lam > m) w.add_delta(1, lam - m);
  } else {
    w.add_delta(n, lam);
  }
  return w;
}

/// Highest weight of the level-one module with respect to the Borel subalgebra
/// whose odd simple roots come from the order δ₁ < ε₁ < δ₂ < ε₂ < ⋯ < δ_n < ε_n:
/// λδ̃₁+Λ̃₀ for λ ≥ 0 and (λ+1)δ̃_n − ε̃_n + Λ̃₀ for λ < 0.
inline AffineWeight nonstandard_weight(int lam, int n) {
  if (n < 1) throw std::invalid_argument("nonstandard_weight: n must be positive");
  AffineWeight w;
  w.m = n;
  w.n = n;
  w.lambda0 = 1;
  if (lam >= 0) {
    w.add_delta(1, lam);
  } else {
    w.add_delta(n, lam + 1);
    w.add_eps(n, -1);
  }
  return w;
}

/// One odd reflection along γ = δ_i − ε_j.
struct ReflectionStep {
  int delta_index = 0;
  int eps_index = 0;
  bool shifted = false;  // Λ(γ̌) ≠ 0, so γ was subtracted
  AffineWeight after;
};

/// Applies the odd reflections that carry the order δ₁ < ε₁ < ⋯ < δ_n < ε_n to
/// ε₁ < ⋯ < ε_n < δ₁ < ⋯ < δ_n, always exchanging the rightmost adjacent pair
/// δ_i < ε_j (the first one is δ_n − ε_n).  For γ = δ_i − ε_j the pairing
/// Λ(γ̌) is a_j + b_i up to sign, where a, b are the ε̃ and δ̃ coefficients;
/// when it is nonzero the weight becomes Λ − γ.
inline std::vector<ReflectionStep> odd_reflect_trace(const AffineWeight& hw, int n) {
  if (n < 1) throw std::invalid_argument("odd_reflect_chain: n must be positive");
  for (const auto& [i, c] : hw.eps)
    if (i < 1 || i > n) throw std::invalid_argument("odd_reflect_chain: eps index out of range");
  for (const auto& [j, c] : hw.delta_part)
    if (j < 1 || j > n) throw std::invalid_argument("odd_reflect_chain: delta index out of range");
  if (hw.delta_imag.denominator() != 1)
    throw std::invalid_argument("odd_reflect_chain: the delta coefficient must be integral");

  // Positive entries are ε indices, negative entries are δ indices.
  std::vector<int> order;
  for (int k = 1; k <= n; ++k) {
    order.push_back(-k);
    order.push_back(k);
  }
  std::vector<ReflectionStep> steps;
  AffineWeight w = hw;
  while (true) {
    std::size_t pos = order.size();
    for (std::size_t p = order.size() - 1; p-- > 0;)
      if (order[p] < 0 && order[p + 1] > 0) {
        pos = p;
        break;
      }
    if (pos == order.size()) break;
    const int i = -order[pos], j = order[pos + 1];
    ReflectionStep step{i, j, w.eps_at(j) + w.delta_at(i) != 0, {}};
    if (step.shifted) {
      w.add_delta(i, -1);
      w.add_eps(j, 1);
    }
    std::swap(order[pos], order[pos + 1]);
    step.after = w;
    steps.push_back(std::move(step));
  }
  return steps;
}

inline AffineWeight odd_reflect_chain(const AffineWeight& hw, int n) {
  auto steps = odd_reflect_trace(hw, n);
  return steps.empty() ? hw : steps.back().after;
}

namespace detail {

/// Σ_{a−b=λ} HS_(a)(zq; yq)·HS_(b)(z⁻¹q; y⁻¹q) with q-degree (doubled) ≤ top.
inline LaurentPoly affine_sum(int lam, int y_count, int z_count, int top) {
  const Truncation t{top, Grading::q_only()};
  auto letters = [&](VarKind kind, int count, int sign) {
    std::vector<Monomial> out;
    for (int k = 1; 2 * k - 1 <= top; ++k)
      for (int j = 0; j < count; ++j)
        out.push_back(Monomial(VarId{kind, static_cast<std::uint32_t>(j)}, sign) * Monomial(qvar(), 2 * k - 1));
    return out;
  };
  const auto zq = letters(VarKind::Z, z_count, 1), yq = letters(VarKind::Y, y_count, 1);
  const auto ziq = letters(VarKind::Z, z_count, -1), yiq = letters(VarKind::Y, y_count, -1);
  LaurentPoly out(t);
  for (int b = std::max(0, -lam); 2 * b + lam <= top; ++b) {
    const int a = b + lam;
    LaurentPoly front = hook_schur_tableau(Partition{a}, zq, yq, t);
    if (front.is_zero()) continue;
    out += front * hook_schur_tableau(Partition{b}, ziq, yiq, t);
  }
  return out;
}

/// Multiplies by q^{−k/2}; every exponent of q must stay nonnegative.
inline LaurentPoly lower_q(const LaurentPoly& p, int k, int order_twice) {
  LaurentPoly out(Truncation{order_twice, Grading::q_only()});
  for (const auto& [m, c] : p.terms()) {
    Monomial shifted = m * Monomial(qvar(), -k);
    if (shifted.exponent(qvar()) < 0) throw std::domain_error("affine character: negative power of q");
    out.add_term(shifted, c);
  }
  return out;
}

}  // namespace detail

/// Level-one ĝl_{m|n} character q^{−|λ|/2} Σ_{μ−ν=λ} HS_μ(zq; yq)·HS_ν(z⁻¹q; y⁻¹q)
/// through q^{order}.  The result is a Laurent polynomial in y_1..y_m and
/// z_1..z_n whose q-exponent is stored doubled.
inline LaurentPoly affine_character_mn(int lam, int m, int n, HalfInt order) {
  if (m < 1 || n < 1) throw std::invalid_argument("affine_character: m and n must be positive");
  if (order.twice() < 0) throw std::invalid_argument("affine_character: negative order");
  const int shift = lam < 0 ? -lam : lam;
  return detail::lower_q(detail::affine_sum(lam, m, n, order.twice() + shift), shift, order.twice());
}

/// Level-one ĝl_{n|n} character with highest weight λδ̃₁+Λ̃₀ (λ ≥ 0) or
/// (λ+1)δ̃_n − ε̃_n + Λ̃₀ (λ < 0).
inline LaurentPoly affine_character_nn(int lam, int n, HalfInt order) { return affine_character_mn(lam, n, n, order); }

}  // namespace hooksym

#endif  // HOOKSYM_SUPERCHAR_HPP
