// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include <hooksym/format.hpp>
#include <hooksym/hooksym.hpp>

#include "oracles.hpp"

using namespace hooksym;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (!r.ok) ++failures;
  std::cout << (r.ok ? "PASS " : "FAIL ") << id << " " << title << " (" << ms << " ms)";
  if (!r.ok) std::cout << ": " << r.detail;
  std::cout << std::endl;
}

std::vector<VarId> letters(VarKind kind, std::size_t n) { return alphabet(kind, n); }

LaurentPoly hook_schur_by_determinants(const Partition& lam, const std::vector<VarId>& x, const std::vector<VarId>& y) {
  LaurentPoly out;
  for (const auto& mu : enumerate_partitions(lam.size(), static_cast<int>(lam.length())))
    if (contains(lam, mu)) out += oracle::schur_jt(mu, x) * oracle::conjugate_skew_schur_jt(lam, mu, y);
  return out;
}

}  // namespace

int main() {
  criterion(1, "golden value HS_(2,0)(q^r;q^n) through q^(5/2)", [] {
    Result r;
    const std::string expected = "q + q^(3/2) + 2*q^2 + 2*q^(5/2)";
    const std::string actual = render(hook_schur_q(Partition{2}, HalfInt::from_twice(5)), false);
    r.expect(actual == expected, "expected " + expected + ", computed " + actual);
    return r;
  });

  criterion(2, "skew-sum and tableau definitions agree, |lambda| <= 6, alphabets 0..3 x 0..3", [] {
    Result r;
    for (std::size_t nx = 0; nx <= 3; ++nx)
      for (std::size_t ny = 0; ny <= 3; ++ny)
        for (const auto& lam : enumerate_partitions(6, 6)) {
          const auto x = letters(VarKind::X, nx), y = letters(VarKind::Y, ny);
          r.expect(hook_schur_skew(lam, x, y) == hook_schur_tableau(lam, x, y),
                   to_string(lam) + " at sizes " + std::to_string(nx) + "," + std::to_string(ny));
        }
    return r;
  });

  criterion(3, "hook Cauchy identity through degree 6, |x|=|y|=3, |z|=2", [] {
    Result r;
    const auto x = letters(VarKind::X, 3), y = letters(VarKind::Y, 3), z = letters(VarKind::Z, 2);
    const Truncation t{6, Grading::uniform()};
    LaurentPoly sum(t);
    for (const auto& lam : enumerate_partitions(3, 2)) sum += hook_schur_by_determinants(lam, x, y) * oracle::schur_jt(lam, z);
    r.expect(hook_cauchy_lhs(x, y, z, 6) == sum, "product differs from determinant-built sum");
    r.expect(hook_cauchy_rhs(x, y, z, 6) == sum, "tableau sum differs from determinant-built sum");
    return r;
  });

  criterion(4, "two-row q-identity through q^6, lambda in -3..3", [] {
    Result r;
    for (int lam = -3; lam <= 3; ++lam) {
      const HalfSeries lhs = q_identity_lhs(lam, HalfInt::whole(6));
      const auto rhs = oracle::q_identity_product(lam, 6);
      for (std::size_t k = 0; k < rhs.size(); ++k)
        r.expect(lhs.coefficient(HalfInt::from_twice(static_cast<int>(k))) == rhs[k],
                 "lambda=" + std::to_string(lam) + " at q^" + HalfInt::from_twice(static_cast<int>(k)).str());
    }
    return r;
  });

  criterion(5, "level-one character equals the closed sum, lambda in -2..2, alphabets 2, degree 4", [] {
    Result r;
    for (int lam = -2; lam <= 2; ++lam)
      r.expect(character(GeneralizedPartition{lam}, 2, 2, 4) == level_one_character(lam, 2, 2, 4),
               "lambda=" + std::to_string(lam));
    return r;
  });

  criterion(6, "Fock product decomposed in x reproduces character(lambda), l <= 2, degree 4", [] {
    Result r;
    const int degree = 4;
    for (std::size_t l = 1; l <= 2; ++l) {
      const auto slices = oracle::decompose_in_x(oracle::fock_product(l, 2, 2, degree), l);
      for (const auto& lam : enumerate_generalized(degree, static_cast<int>(l))) {
        auto it = slices.find(lam);
        const LaurentPoly expected = it == slices.end() ? LaurentPoly{} : it->second;
        r.expect(character(lam, 2, 2, degree) == expected, "lambda=" + to_string(lam));
      }
      for (const auto& [lam, c] : slices)
        r.expect(std::max(lam.first(), -lam.last()) <= degree, "unexpected weight " + to_string(lam));
    }
    return r;
  });

  criterion(7, "duality of q-characters through q^5, l <= 2, |lambda_i| <= 2", [] {
    Result r;
    for (int l = 1; l <= 2; ++l)
      for (const auto& lam : enumerate_generalized(2, l))
        r.expect(q_character(lam, 5) == q_character(lam.dual().shifted(-1), 5), "lambda=" + to_string(lam));
    return r;
  });

  criterion(8, "Littlewood-Richardson coefficients equal Schur product decompositions, |mu|,|nu| <= 4", [] {
    Result r;
    for (const auto& mu : enumerate_partitions(4, 4))
      for (const auto& nu : enumerate_partitions(4, 4)) {
        const std::size_t rank = std::max<std::size_t>(1, mu.length() + nu.length());
        const auto x = letters(VarKind::X, rank);
        std::map<GeneralizedPartition, Integer> lr;
        for (const auto& [lam, m] : lr_coefficients(mu, nu)) lr.emplace(GeneralizedPartition::of(lam, rank), m);
        r.expect(lr == decompose_character(GlCharacter{rank, oracle::schur_jt(mu, x) * oracle::schur_jt(nu, x)}),
                 to_string(mu) + " * " + to_string(nu));
      }
    return r;
  });

  criterion(9, "tensor decomposition matches branching, parts in -2..2, (l,r) in {(1,1),(2,1)}, bound 4", [] {
    Result r;
    for (const auto& [l, rr] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}})
      for (const auto& mu : enumerate_generalized(2, l))
        for (const auto& nu : enumerate_generalized(2, rr))
          r.expect(verify_tensor_against_branching(mu, static_cast<std::size_t>(l), nu, static_cast<std::size_t>(rr), 4),
                   to_string(mu) + " x " + to_string(nu));
    return r;
  });

  criterion(10, "odd reflections reach the integrable weights, n in 1..3, lambda in -3..n+3", [] {
    Result r;
    for (int n = 1; n <= 3; ++n)
      for (int lam = -3; lam <= n + 3; ++lam) {
        AffineWeight expected;
        expected.m = n;
        expected.n = n;
        expected.lambda0 = 1;
        if (lam < 0)
          expected.add_delta(n, lam);
        else
          for (int i = 1; i <= lam; ++i) i <= n ? expected.add_eps(i, 1) : expected.add_delta(1, 1);
        r.expect(odd_reflect_chain(nonstandard_weight(lam, n), n) == expected,
                 "n=" + std::to_string(n) + " lambda=" + std::to_string(lam));
      }
    return r;
  });

  criterion(11, "affine gl(2|1) character equals the x^lambda slice of the product, lambda in -1..1, q-order 3", [] {
    Result r;
    const int order = 3;
    for (int lam = -1; lam <= 1; ++lam) {
      const int shift = lam < 0 ? -lam : lam;
      const LaurentPoly product = oracle::glmn_product(2, 1, 2 * order + shift);
      const LaurentPoly slice = product.coefficient_of(VarKind::X, lam == 0 ? Monomial{} : Monomial(var(VarKind::X, 0), lam));
      LaurentPoly lowered(Truncation{2 * order, Grading::q_only()});
      for (const auto& [m, c] : slice.terms()) lowered.add_term(m * Monomial(qvar(), -shift), c);
      r.expect(affine_character_mn(lam, 2, 1, HalfInt::whole(order)) == lowered, "lambda=" + std::to_string(lam));
    }
    return r;
  });

  return failures == 0 ? 0 : 1;
}
