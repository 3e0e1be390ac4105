#ifndef HOOKSYM_SYMFUN_HPP
#define HOOKSYM_SYMFUN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "partitions.hpp"
#include "polyring.hpp"
#include "series.hpp"

namespace hooksym {

/// Which alphabet a tableau entry comes from.
enum class Side : std::uint8_t { X, Y };

struct Entry {
  Side side = Side::X;
  std::uint32_t letter = 0;  // 0-based position in its (linearly ordered) alphabet

  bool operator==(const Entry&) const = default;
};

/// An (∞|∞)-semistandard filling of a shape.
///
/// The x-entries occupy a subdiagram μ ⊆ λ and form a semistandard tableau
/// (rows weakly increasing, columns strictly increasing).  The y-entries fill
/// λ/μ conjugate-semistandardly (rows strictly increasing, columns weakly
/// increasing).
struct HookTableau {
  Partition shape;
  std::vector<std::vector<Entry>> rows;

  Partition inner_shape() const {
    std::vector<int> parts;
    for (const auto& row : rows)
      parts.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [](const Entry& e) { return e.side == Side::X; })));
    return Partition(std::move(parts));
  }

  /// Checks every row/column rule and the subdiagram condition.
  bool is_valid() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != shape[i]) return false;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const Entry& e = rows[i][j];
        if (j > 0) {
          const Entry& l = rows[i][j - 1];
          if (e.side == Side::X && (l.side != Side::X || l.letter > e.letter)) return false;
          if (e.side == Side::Y && l.side == Side::Y && l.letter >= e.letter) return false;
        }
        if (i > 0) {
          const Entry& u = rows[i - 1][j];
          if (e.side == Side::X && (u.side != Side::X || u.letter >= e.letter)) return false;
          if (e.side == Side::Y && u.side == Side::Y && u.letter > e.letter) return false;
        }
      }
    }
    return true;
  }
};

/// Optional pruning for weighted enumeration: letter weights (nonnegative)
/// and the largest total weight that will be visited.
struct LetterBudget {
  std::vector<int> x_weights;
  std::vector<int> y_weights;
  int max_total = 0;
};

namespace detail {

template <class Visitor>
class HookFiller {
 public:
  HookFiller(const Partition& shape, std::size_t nx, std::size_t ny, const LetterBudget* budget, Visitor& visit)
      : nx_(nx), ny_(ny), budget_(budget), visit_(visit), remaining_(shape.size()) {
    t_.shape = shape;
    t_.rows.resize(shape.length());
    for (std::size_t i = 0; i < shape.length(); ++i) t_.rows[i].resize(static_cast<std::size_t>(shape[i]));
    if (budget_) {
      min_weight_ = std::numeric_limits<int>::max();
      for (int w : budget_->x_weights) min_weight_ = std::min(min_weight_, w);
      for (int w : budget_->y_weights) min_weight_ = std::min(min_weight_, w);
      if (min_weight_ == std::numeric_limits<int>::max()) min_weight_ = 0;
    }
  }

  void run() { fill(0, 0); }

 private:
  bool affordable(int w) const {
    return !budget_ || weight_ + w + (remaining_ - 1) * min_weight_ <= budget_->max_total;
  }

  void place(std::size_t row, std::size_t col, Entry e, int w) {
    t_.rows[row][col] = e;
    weight_ += w;
    --remaining_;
    fill(row, col + 1);
    ++remaining_;
    weight_ -= w;
  }

  void fill(std::size_t row, std::size_t col) {
    if (row == t_.rows.size()) {
      visit_(static_cast<const HookTableau&>(t_), weight_);
      return;
    }
    if (col == t_.rows[row].size()) {
      fill(row + 1, 0);
      return;
    }
    const Entry* left = col > 0 ? &t_.rows[row][col - 1] : nullptr;
    const Entry* up = row > 0 ? &t_.rows[row - 1][col] : nullptr;

    if ((!left || left->side == Side::X) && (!up || up->side == Side::X)) {
      std::size_t lo = left ? left->letter : 0;
      if (up) lo = std::max<std::size_t>(lo, up->letter + 1);
      for (std::size_t k = lo; k < nx_; ++k) {
        int w = budget_ ? budget_->x_weights[k] : 0;
        if (affordable(w)) place(row, col, Entry{Side::X, static_cast<std::uint32_t>(k)}, w);
      }
    }
    std::size_t lo = 0;
    if (left && left->side == Side::Y) lo = left->letter + 1;
    if (up && up->side == Side::Y) lo = std::max<std::size_t>(lo, up->letter);
    for (std::size_t k = lo; k < ny_; ++k) {
      int w = budget_ ? budget_->y_weights[k] : 0;
      if (affordable(w)) place(row, col, Entry{Side::Y, static_cast<std::uint32_t>(k)}, w);
    }
  }

  std::size_t nx_, ny_;
  const LetterBudget* budget_;
  Visitor& visit_;
  HookTableau t_;
  int weight_ = 0;
  int remaining_ = 0;
  int min_weight_ = 0;
};

}  // namespace detail

/// Calls visit(const HookTableau&, int weight) for every (∞|∞)-semistandard
/// tableau of the given shape with x-letters 0..nx-1 and y-letters 0..ny-1.
/// With a budget, only tableaux of total weight ≤ budget->max_total are visited
/// (and `weight` is their total); weights must be nonnegative.
template <class Visitor>
void for_each_hook_tableau(const Partition& shape, std::size_t nx, std::size_t ny, Visitor&& visit,
                           const LetterBudget* budget = nullptr) {
  detail::HookFiller<std::remove_reference_t<Visitor>> filler(shape, nx, ny, budget, visit);
  filler.run();
}

namespace detail {

/// Semistandard fillings of a skew diagram with letters 0..n-1; visit receives
/// the content vector (multiplicity of each letter).
template <class Visitor>
void for_each_skew_ssyt_content(const SkewShape& shape, std::size_t n, Visitor&& visit) {
  const std::size_t rows = shape.outer.length();
  // grid[i][j] for j in [inner_i, outer_i); -1 marks the inner part.
  std::vector<std::vector<int>> grid(rows);
  for (std::size_t i = 0; i < rows; ++i) grid[i].assign(static_cast<std::size_t>(shape.outer[i]), -1);
  std::vector<int> content(n, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t row, std::size_t col) {
    if (row == rows) {
      visit(static_cast<const std::vector<int>&>(content));
      return;
    }
    if (col == grid[row].size()) {
      fill(row + 1, static_cast<std::size_t>(shape.inner[row + 1]));
      return;
    }
    int lo = 0;
    if (col > 0 && grid[row][col - 1] >= 0) lo = grid[row][col - 1];
    if (row > 0 && col < grid[row - 1].size() && grid[row - 1][col] >= 0) lo = std::max(lo, grid[row - 1][col] + 1);
    for (int k = lo; k < static_cast<int>(n); ++k) {
      grid[row][col] = k;
      ++content[static_cast<std::size_t>(k)];
      fill(row, col + 1);
      --content[static_cast<std::size_t>(k)];
    }
    grid[row][col] = -1;
  };
  if (rows == 0) {
    visit(static_cast<const std::vector<int>&>(content));
    return;
  }
  fill(0, static_cast<std::size_t>(shape.inner[0]));
}

inline std::vector<Monomial> as_letters(std::span<const VarId> alphabet) {
  std::vector<Monomial> out;
  out.reserve(alphabet.size());
  for (const auto& v : alphabet) out.emplace_back(v);
  return out;
}

inline Monomial content_monomial(std::span<const Monomial> letters, const std::vector<int>& content) {
  Monomial m;
  for (std::size_t k = 0; k < content.size(); ++k)
    if (content[k]) m = m * letters[k].pow(content[k]);
  return m;
}

}  // namespace detail

/// Skew Schur polynomial s_{λ/μ} on a finite alphabet (of letters, which may be
/// arbitrary monomials), by enumerating semistandard fillings.
inline LaurentPoly skew_schur(const SkewShape& shape, std::span<const Monomial> letters,
                              std::optional<Truncation> trunc = std::nullopt) {
  LaurentPoly out(trunc);
  detail::for_each_skew_ssyt_content(shape, letters.size(), [&](const std::vector<int>& content) {
    out.add_term(detail::content_monomial(letters, content), 1);
  });
  return out;
}

inline LaurentPoly skew_schur(const SkewShape& shape, std::span<const VarId> alphabet,
                              std::optional<Truncation> trunc = std::nullopt) {
  auto letters = detail::as_letters(alphabet);
  return skew_schur(shape, std::span<const Monomial>(letters), std::move(trunc));
}

/// Schur polynomial s_λ; zero when λ has more rows than there are letters.
inline LaurentPoly schur(const Partition& lam, std::span<const Monomial> letters,
                         std::optional<Truncation> trunc = std::nullopt) {
  return skew_schur(SkewShape(lam, Partition{}), letters, std::move(trunc));
}

inline LaurentPoly schur(const Partition& lam, std::span<const VarId> alphabet,
                         std::optional<Truncation> trunc = std::nullopt) {
  return skew_schur(SkewShape(lam, Partition{}), alphabet, std::move(trunc));
}

/// All μ ⊆ λ.
inline std::vector<Partition> subpartitions(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int cap) {
    if (row == lam.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 0; p <= std::min(cap, lam[row]); ++p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, lam.empty() ? 0 : lam[0]);
  return out;
}

/// HS_λ(x;y) = Σ_{μ⊆λ} s_μ(x)·s_{λ'/μ'}(y).
inline LaurentPoly hook_schur_skew(const Partition& lam, std::span<const Monomial> x, std::span<const Monomial> y,
                                   std::optional<Truncation> trunc = std::nullopt) {
  LaurentPoly out(trunc);
  const Partition lam_conj = conjugate(lam);
  for (const auto& mu : subpartitions(lam)) {
    LaurentPoly sx = schur(mu, x, trunc);
    if (sx.is_zero()) continue;
    LaurentPoly sy = skew_schur(SkewShape(lam_conj, conjugate(mu)), y, trunc);
    out += sx * sy;
  }
  return out;
}

inline LaurentPoly hook_schur_skew(const Partition& lam, std::span<const VarId> x, std::span<const VarId> y,
                                   std::optional<Truncation> trunc = std::nullopt) {
  auto xl = detail::as_letters(x), yl = detail::as_letters(y);
  return hook_schur_skew(lam, std::span<const Monomial>(xl), std::span<const Monomial>(yl), std::move(trunc));
}

/// HS_λ(x;y) = Σ_T (xy)^T over (∞|∞)-semistandard tableaux of shape λ.
///
/// With a truncation whose grading is nonnegative on every letter, tableaux
/// are pruned by graded degree during the enumeration.
inline LaurentPoly hook_schur_tableau(const Partition& lam, std::span<const Monomial> x, std::span<const Monomial> y,
                                      std::optional<Truncation> trunc = std::nullopt) {
  LaurentPoly out(trunc);
  std::optional<LetterBudget> budget;
  if (trunc) {
    LetterBudget b;
    bool nonnegative = true;
    for (const auto& m : x) b.x_weights.push_back(trunc->grading.degree(m));
    for (const auto& m : y) b.y_weights.push_back(trunc->grading.degree(m));
    for (int w : b.x_weights) nonnegative = nonnegative && w >= 0;
    for (int w : b.y_weights) nonnegative = nonnegative && w >= 0;
    b.max_total = trunc->max_degree;
    if (nonnegative) budget = std::move(b);
  }
  for_each_hook_tableau(
      lam, x.size(), y.size(),
      [&](const HookTableau& t, int) {
        Monomial m;
        for (const auto& row : t.rows)
          for (const auto& e : row) m = m * (e.side == Side::X ? x[e.letter] : y[e.letter]);
        out.add_term(m, 1);
      },
      budget ? &*budget : nullptr);
  return out;
}

inline LaurentPoly hook_schur_tableau(const Partition& lam, std::span<const VarId> x, std::span<const VarId> y,
                                      std::optional<Truncation> trunc = std::nullopt) {
  auto xl = detail::as_letters(x), yl = detail::as_letters(y);
  return hook_schur_tableau(lam, std::span<const Monomial>(xl), std::span<const Monomial>(yl), std::move(trunc));
}

/// Π_{i,j,k} (1 − x_i z_k)^{-1} (1 + y_j z_k), graded by total degree and
/// truncated at `trunc`.
inline LaurentPoly hook_cauchy_lhs(std::span<const VarId> x, std::span<const VarId> y, std::span<const VarId> z,
                                   int trunc) {
  if (trunc < 0) throw std::invalid_argument("hook_cauchy_lhs: negative truncation");
  const Truncation t{trunc, Grading::uniform()};
  LaurentPoly out = LaurentPoly::one(t);
  for (const auto& zk : z) {
    for (const auto& xi : x)
      out *= geometric_factor(Monomial(xi) * Monomial(zk), FactorSign::Minus, trunc / 2).truncated(t);
    for (const auto& yj : y) out *= geometric_factor(Monomial(yj) * Monomial(zk), FactorSign::Plus, 0).truncated(t);
  }
  return out;
}

/// Σ_λ HS_λ(x;y)·s_λ(z) over ℓ(λ) ≤ |z|, through total degree `trunc`.
inline LaurentPoly hook_cauchy_rhs(std::span<const VarId> x, std::span<const VarId> y, std::span<const VarId> z,
                                   int trunc) {
  const Truncation t{trunc, Grading::uniform()};
  LaurentPoly out(t);
  // deg HS_λ·s_λ = 2|λ|
  for (const auto& lam : enumerate_partitions(trunc / 2, static_cast<int>(z.size())))
    out += hook_schur_tableau(lam, x, y, t) * schur(lam, z, t);
  return out;
}

/// HS_μ(q^{1/2}, q^{3/2}, … ; q, q², …) through q^{order}, by counting tableaux
/// with m(T) = s.  Exact: every entry has weight ≥ ½, so only finitely many
/// tableaux lie below any order.
inline HalfSeries hook_schur_q(const Partition& mu, HalfInt order) {
  HalfSeries out(order);
  const int budget = order.twice();
  if (mu.size() > budget) return out;
  LetterBudget b;
  for (int k = 1; 2 * k - 1 <= budget; ++k) b.x_weights.push_back(2 * k - 1);
  for (int k = 1; 2 * k <= budget; ++k) b.y_weights.push_back(2 * k);
  b.max_total = budget;
  for_each_hook_tableau(
      mu, b.x_weights.size(), b.y_weights.size(),
      [&](const HookTableau&, int weight) { out.add(HalfInt::from_twice(weight), 1); }, &b);
  return out;
}

}  // namespace hooksym

#endif  // HOOKSYM_SYMFUN_HPP
