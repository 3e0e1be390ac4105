#include <map>
#include <random>

#include <gtest/gtest.h>

#include <hooksym/format.hpp>
#include <hooksym/glchar.hpp>

#include "oracles.hpp"

using namespace hooksym;

namespace {

std::vector<VarId> xs(std::size_t n) { return alphabet(VarKind::X, n); }

LaurentPoly det_power(std::size_t rank, int d) {
  Monomial m;
  for (std::size_t i = 0; i < rank; ++i) m = m * Monomial(var(VarKind::X, static_cast<std::uint32_t>(i)), d);
  LaurentPoly out;
  out.add_term(m, 1);
  return out;
}

std::map<GeneralizedPartition, Integer> lr_in_rank(const Partition& mu, const Partition& nu, std::size_t rank) {
  std::map<GeneralizedPartition, Integer> out;
  for (const auto& [lam, m] : lr_coefficients(mu, nu))
    if (lam.length() <= rank) out.emplace(GeneralizedPartition::of(lam, rank), m);
  return out;
}

Integer dim(const Partition& lam, std::size_t rank) {
  if (lam.length() > rank) return 0;
  return dimension(gl_character(GeneralizedPartition::of(lam, rank)));
}

}  // namespace

TEST(GlCharacter, Examples) {
  EXPECT_EQ(render(gl_character(GeneralizedPartition{1}).poly), "x1");
  EXPECT_EQ(render(gl_character(GeneralizedPartition{-1}).poly), "x1^-1");
  auto adj = gl_character(GeneralizedPartition{1, -1});
  EXPECT_EQ(adj.rank, 2u);
  EXPECT_EQ(adj.poly.term_count(), 3u);
  EXPECT_EQ(adj.poly.coefficient(Monomial{}), 1);
  EXPECT_EQ(adj.poly.coefficient(Monomial(var(VarKind::X, 0)) * Monomial(var(VarKind::X, 1), -1)), 1);
  EXPECT_EQ(adj.poly.coefficient(Monomial(var(VarKind::X, 0), -1) * Monomial(var(VarKind::X, 1))), 1);
}

TEST(GlCharacter, PartitionsGiveSchur) {
  for (std::size_t rank = 1; rank <= 3; ++rank)
    for (const auto& lam : enumerate_partitions(5, rank))
      EXPECT_EQ(gl_character(GeneralizedPartition::of(lam, rank)).poly, oracle::schur_jt(lam, xs(rank))) << to_string(lam);
}

TEST(GlCharacter, ShiftCovariance) {
  for (std::size_t rank = 1; rank <= 3; ++rank)
    for (const auto& lam : enumerate_generalized(2, static_cast<int>(rank)))
      for (int d = -2; d <= 2; ++d)
        EXPECT_EQ(gl_character(lam.shifted(d)).poly, det_power(rank, d) * gl_character(lam).poly) << to_string(lam) << " " << d;
}

TEST(GlCharacter, SymmetricUnderTransposition) {
  for (const auto& lam : enumerate_generalized(2, 3)) {
    const auto p = gl_character(lam).poly;
    std::map<VarId, Monomial> swap{{var(VarKind::X, 0), Monomial(var(VarKind::X, 1))},
                                   {var(VarKind::X, 1), Monomial(var(VarKind::X, 0))}};
    EXPECT_EQ(substitute(p, swap), p) << to_string(lam);
  }
}

TEST(Decompose, Examples) {
  LaurentPoly c;
  for (int e = 1; e >= -2; --e) c.add_term(Monomial(var(VarKind::X, 0), e), 1);
  std::map<GeneralizedPartition, Integer> expected{{GeneralizedPartition{1}, 1},
                                                   {GeneralizedPartition{0}, 1},
                                                   {GeneralizedPartition{-1}, 1},
                                                   {GeneralizedPartition{-2}, 1}};
  EXPECT_EQ(decompose_character(GlCharacter{1, c}), expected);

  const auto v = gl_character(GeneralizedPartition{1, 0}).poly;
  const auto vstar = gl_character(GeneralizedPartition{0, -1}).poly;
  std::map<GeneralizedPartition, Integer> adjoint{{GeneralizedPartition{1, -1}, 1}, {GeneralizedPartition{0, 0}, 1}};
  EXPECT_EQ(decompose_character(GlCharacter{2, v * vstar}), adjoint);
}

TEST(Decompose, RoundTrip) {
  std::mt19937 rng(7);
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    const auto pool = enumerate_generalized(2, static_cast<int>(rank));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> mult(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
      std::map<GeneralizedPartition, Integer> combo;
      LaurentPoly sum;
      for (int k = 0; k < 4; ++k) {
        const auto& lam = pool[pick(rng)];
        const int m = mult(rng);
        combo[lam] += m;
        sum += gl_character(lam).poly * Integer(m);
      }
      EXPECT_EQ(decompose_character(GlCharacter{rank, sum}), combo);
    }
  }
}

TEST(Decompose, RejectsNonCharacters) {
  LaurentPoly c;
  c.add_term(Monomial(var(VarKind::X, 0)), 1);
  EXPECT_THROW(decompose_character(GlCharacter{2, c}), NonCharacter);
  EXPECT_THROW(decompose_character(GlCharacter{1, c * Integer(-1)}), NonCharacter);
}

TEST(LittlewoodRichardson, Examples) {
  std::map<Partition, Integer> pieri{{Partition{2}, 1}, {Partition{1, 1}, 1}};
  EXPECT_EQ(lr_coefficients(Partition{1}, Partition{1}), pieri);
  std::map<Partition, Integer> unit{{Partition{3, 1}, 1}};
  EXPECT_EQ(lr_coefficients(Partition{}, Partition{3, 1}), unit);
  EXPECT_EQ(lr_coefficients(Partition{2, 1}, Partition{2, 1}).at(Partition{3, 2, 1}), 2);
}

TEST(LittlewoodRichardson, MatchesSchurProducts) {
  for (const auto& mu : enumerate_partitions(4, 4))
    for (const auto& nu : enumerate_partitions(4, 4)) {
      const std::size_t rank = std::max<std::size_t>(1, mu.length() + nu.length());
      const auto product = oracle::schur_jt(mu, xs(rank)) * oracle::schur_jt(nu, xs(rank));
      EXPECT_EQ(lr_in_rank(mu, nu, rank), decompose_character(GlCharacter{rank, product}))
          << to_string(mu) << " " << to_string(nu);
    }
}

TEST(LittlewoodRichardson, Symmetric) {
  for (const auto& mu : enumerate_partitions(5, 5))
    for (const auto& nu : enumerate_partitions(5, 5)) EXPECT_EQ(lr_coefficients(mu, nu), lr_coefficients(nu, mu));
}

TEST(LittlewoodRichardson, DimensionCheck) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& mu : enumerate_partitions(3, 3))
      for (const auto& nu : enumerate_partitions(3, 3)) {
        Integer total = 0;
        for (const auto& [lam, m] : lr_coefficients(mu, nu)) total += m * dim(lam, n);
        EXPECT_EQ(total, dim(mu, n) * dim(nu, n)) << n << " " << to_string(mu) << " " << to_string(nu);
      }
}

TEST(MixedTensor, Examples) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      std::map<GeneralizedPartition, Integer> expected{{GeneralizedPartition{a - b}, 1}};
      EXPECT_EQ(mixed_tensor_coefficients(Partition{a}, Partition{b}, 1), expected);
    }
  std::map<GeneralizedPartition, Integer> trivial{{GeneralizedPartition{2, 1, 0}, 1}};
  EXPECT_EQ(mixed_tensor_coefficients(Partition{2, 1}, Partition{}, 3), trivial);
  std::map<GeneralizedPartition, Integer> adjoint{{GeneralizedPartition{1, -1}, 1}, {GeneralizedPartition{0, 0}, 1}};
  EXPECT_EQ(mixed_tensor_coefficients(Partition{1}, Partition{1}, 2), adjoint);
  EXPECT_THROW(mixed_tensor_coefficients(Partition{1, 1}, Partition{}, 1), std::invalid_argument);
}

TEST(MixedTensor, MatchesProductOfCharacters) {
  for (const auto& mu : enumerate_partitions(3, 2))
    for (const auto& nu : enumerate_partitions(3, 2)) {
      const auto product = gl_character(GeneralizedPartition::of(mu, 2)).poly *
                           gl_character(GeneralizedPartition::of(nu, 2).dual()).poly;
      EXPECT_EQ(mixed_tensor_coefficients(mu, nu, 2), decompose_character(GlCharacter{2, product}));
    }
}

TEST(Branching, Examples) {
  std::map<std::pair<GeneralizedPartition, GeneralizedPartition>, Integer> standard{
      {{GeneralizedPartition{1}, GeneralizedPartition{0}}, 1}, {{GeneralizedPartition{0}, GeneralizedPartition{1}}, 1}};
  EXPECT_EQ(branching_gl_sum(GeneralizedPartition{1, 0}, 1, 1), standard);
  for (int d = -2; d <= 2; ++d) {
    std::map<std::pair<GeneralizedPartition, GeneralizedPartition>, Integer> det{
        {{GeneralizedPartition{d, d}, GeneralizedPartition{d}}, 1}};
    EXPECT_EQ(branching_gl_sum(GeneralizedPartition{d, d, d}, 2, 1), det);
  }
}

TEST(Branching, DimensionsAddUp) {
  for (const auto& lam : enumerate_generalized(2, 3)) {
    Integer total = 0;
    for (const auto& [key, m] : branching_gl_sum(lam, 2, 1))
      total += m * dimension(gl_character(key.first)) * dimension(gl_character(key.second));
    EXPECT_EQ(total, dimension(gl_character(lam))) << to_string(lam);
  }
}
