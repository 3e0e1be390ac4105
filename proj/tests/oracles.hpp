#ifndef HOOKSYM_TESTS_ORACLES_HPP
#define HOOKSYM_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests.  None of these
// go through tableau enumeration.

#include <functional>
#include <map>
#include <vector>

#include <hooksym/hooksym.hpp>

namespace oracle {

using hooksym::Grading;
using hooksym::Integer;
using hooksym::LaurentPoly;
using hooksym::Monomial;
using hooksym::Partition;
using hooksym::Truncation;
using hooksym::VarId;
using hooksym::VarKind;

/// Complete homogeneous h_k(x) (k < 0 gives 0).
inline LaurentPoly complete(int k, const std::vector<VarId>& x) {
  LaurentPoly out;
  if (k < 0) return out;
  std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t i, int left, Monomial m) {
    if (i == x.size()) {
      if (left == 0) out.add_term(m, 1);
      return;
    }
    for (int e = 0; e <= left; ++e) rec(i + 1, left - e, m * Monomial(x[i], e));
  };
  rec(0, k, Monomial{});
  return out;
}

/// Elementary e_k(x).
inline LaurentPoly elementary(int k, const std::vector<VarId>& x) {
  LaurentPoly out;
  if (k < 0 || k > static_cast<int>(x.size())) return out;
  std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t i, int left, Monomial m) {
    if (left == 0) {
      out.add_term(m, 1);
      return;
    }
    if (i == x.size()) return;
    rec(i + 1, left - 1, m * Monomial(x[i]));
    rec(i + 1, left, m);
  };
  rec(0, k, Monomial{});
  return out;
}

/// Determinant by cofactor expansion along the first row.
inline LaurentPoly det(const std::vector<std::vector<LaurentPoly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly::one();
  LaurentPoly out;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    LaurentPoly term = a[0][j] * det(minor);
    if (j % 2) term *= Integer(-1);
    out += term;
  }
  return out;
}

/// Jacobi-Trudi: s_{λ/μ} = det(h_{λ_i − μ_j − i + j}).
inline LaurentPoly skew_schur_jt(const Partition& lam, const Partition& mu, const std::vector<VarId>& x) {
  const std::size_t n = lam.length();
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = complete(lam[i] - mu[j] - static_cast<int>(i) + static_cast<int>(j), x);
  return det(a);
}

inline LaurentPoly schur_jt(const Partition& lam, const std::vector<VarId>& x) { return skew_schur_jt(lam, {}, x); }

/// Dual Jacobi-Trudi: s_{λ'/μ'} = det(e_{λ_i − μ_j − i + j}).
inline LaurentPoly conjugate_skew_schur_jt(const Partition& lam, const Partition& mu, const std::vector<VarId>& y) {
  const std::size_t n = lam.length();
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = elementary(lam[i] - mu[j] - static_cast<int>(i) + static_cast<int>(j), y);
  return det(a);
}

/// Partition counts p(n, ≤ k parts) from p(n, k) = p(n, k−1) + p(n−k, k).
inline long long partition_count(int n, int k) {
  std::vector<std::vector<long long>> p(static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(k + 1), 0));
  for (int j = 0; j <= k; ++j) p[0][static_cast<std::size_t>(j)] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= k; ++j)
      p[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
          p[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)] +
          (m >= j ? p[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(j)] : 0);
  return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// Dense power series in q^{1/2}: index = doubled exponent.
using Dense = std::vector<Integer>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// (1 + c·q^{k/2})^{±1} by repeated geometric expansion.
inline Dense binomial_factor(std::size_t size, int k, int sign, bool inverse) {
  Dense out(size, 0);
  out[0] = 1;
  if (!inverse) {
    if (static_cast<std::size_t>(k) < size) out[static_cast<std::size_t>(k)] += sign;
    return out;
  }
  Integer p = 1;
  for (std::size_t e = static_cast<std::size_t>(k), n = 1; e < size; e += static_cast<std::size_t>(k), ++n) {
    p *= -sign;
    out[e] = p;
  }
  return out;
}

/// q^{gap/2}(1 + q^{gap+1/2})^{−1} Π(1+q^r)² / Π(1−q^n)² through doubled order 2N,
/// with gap = λ (λ ≥ 0) or −λ−1 (λ < 0).
inline Dense q_identity_product(int lam, int order) {
  const int gap = lam >= 0 ? lam : -lam - 1;
  const std::size_t size = static_cast<std::size_t>(2 * order + 1);
  Dense acc(size, 0);
  acc[0] = 1;
  acc = dense_mul(acc, binomial_factor(size, 2 * gap + 1, 1, true));
  for (int k = 1; k < 2 * order + 1; k += 2) {
    acc = dense_mul(acc, binomial_factor(size, k, 1, false));
    acc = dense_mul(acc, binomial_factor(size, k, 1, false));
  }
  for (int k = 2; k < 2 * order + 1; k += 2) {
    acc = dense_mul(acc, binomial_factor(size, k, -1, true));
    acc = dense_mul(acc, binomial_factor(size, k, -1, true));
  }
  Dense out(size, 0);
  for (std::size_t i = 0; i + static_cast<std::size_t>(gap) < size; ++i) out[i + static_cast<std::size_t>(gap)] = acc[i];
  return out;
}

/// Π_i Π_n (1 + x_i y_n) Π_m (1 + x_i⁻¹ y'_m) / Π_r (1 − x_i z_r)(1 − x_i⁻¹ z'_r)
/// with y' = Yinv and z' = Zinv letters, x carrying degree 0, through total
/// degree `degree` in the y, z letters.
inline LaurentPoly fock_product(std::size_t l, std::size_t ny, std::size_t nz, int degree) {
  const Truncation t{degree, Grading::uniform().with(VarKind::X, 0)};
  LaurentPoly out = LaurentPoly::one(t);
  for (std::size_t i = 0; i < l; ++i) {
    const Monomial x(VarId{VarKind::X, static_cast<std::uint32_t>(i)});
    const Monomial xi(VarId{VarKind::X, static_cast<std::uint32_t>(i)}, -1);
    for (std::size_t n = 0; n < ny; ++n) {
      out *= hooksym::geometric_factor(x * Monomial(VarId{VarKind::Y, static_cast<std::uint32_t>(n)}), hooksym::FactorSign::Plus, 1);
      out *= hooksym::geometric_factor(xi * Monomial(VarId{VarKind::Yinv, static_cast<std::uint32_t>(n)}), hooksym::FactorSign::Plus, 1);
    }
    for (std::size_t r = 0; r < nz; ++r) {
      out *= hooksym::geometric_factor(x * Monomial(VarId{VarKind::Z, static_cast<std::uint32_t>(r)}), hooksym::FactorSign::Minus, degree);
      out *= hooksym::geometric_factor(xi * Monomial(VarId{VarKind::Zinv, static_cast<std::uint32_t>(r)}), hooksym::FactorSign::Minus, degree);
    }
  }
  return out;
}

/// Π_s Π_i (1 + x y_i q^s)(1 + x⁻¹ y_i⁻¹ q^s) / Π_j (1 − x z_j q^s)(1 − x⁻¹ z_j⁻¹ q^s)
/// over s ∈ ½ + ℤ₊, graded by q only (doubled), through doubled degree `top`.
inline LaurentPoly glmn_product(int m, int n, int top) {
  const Truncation t{top, Grading::q_only()};
  LaurentPoly out = LaurentPoly::one(t);
  const Monomial x(VarId{VarKind::X, 0}), xi(VarId{VarKind::X, 0}, -1);
  for (int s2 = 1; s2 <= top; s2 += 2) {
    const Monomial q(hooksym::qvar(), s2);
    for (int i = 0; i < m; ++i) {
      const VarId y{VarKind::Y, static_cast<std::uint32_t>(i)};
      out *= hooksym::geometric_factor(x * Monomial(y) * q, hooksym::FactorSign::Plus, 1);
      out *= hooksym::geometric_factor(xi * Monomial(y, -1) * q, hooksym::FactorSign::Plus, 1);
    }
    for (int j = 0; j < n; ++j) {
      const VarId z{VarKind::Z, static_cast<std::uint32_t>(j)};
      out *= hooksym::geometric_factor(x * Monomial(z) * q, hooksym::FactorSign::Minus, top / s2);
      out *= hooksym::geometric_factor(xi * Monomial(z, -1) * q, hooksym::FactorSign::Minus, top / s2);
    }
  }
  return out;
}

/// Rewrites Σ_α P_α(y,z)·x^α as Σ_λ C_λ(y,z)·ch V^λ_l by peeling each
/// (y,z)-slice in x.
inline std::map<hooksym::GeneralizedPartition, LaurentPoly> decompose_in_x(const LaurentPoly& p, std::size_t l) {
  std::map<Monomial, LaurentPoly> by_rest;
  for (const auto& [xm, rest] : p.group_by(VarKind::X))
    for (const auto& [m, c] : rest.terms()) by_rest[m].add_term(xm, c);
  std::map<hooksym::GeneralizedPartition, LaurentPoly> out;
  for (const auto& [m, xpoly] : by_rest)
    for (const auto& [lam, k] : hooksym::decompose_character(hooksym::GlCharacter{l, xpoly})) out[lam].add_term(m, k);
  return out;
}

}  // namespace oracle

#endif  // HOOKSYM_TESTS_ORACLES_HPP
