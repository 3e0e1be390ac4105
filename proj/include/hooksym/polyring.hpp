#ifndef HOOKSYM_POLYRING_HPP
#define HOOKSYM_POLYRING_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace hooksym {

/// Alphabets. The inverse kinds are independent formal variables standing for
/// x_i^{-1}, y_i^{-1}, z_i^{-1}; they are not negative powers of X, Y, Z.
enum class VarKind : std::uint8_t { X, Xinv, Y, Yinv, Z, Zinv, Q };

inline constexpr std::size_t kVarKinds = 7;

inline const char* kind_name(VarKind k) {
  switch (k) {
    case VarKind::X: return "x";
    case VarKind::Xinv: return "xinv";
    case VarKind::Y: return "y";
    case VarKind::Yinv: return "yinv";
    case VarKind::Z: return "z";
    case VarKind::Zinv: return "zinv";
    case VarKind::Q: return "q";
  }
  return "?";
}

struct VarId {
  VarKind kind = VarKind::X;
  std::uint32_t index = 0;

  auto operator<=>(const VarId&) const = default;

  /// "x1" for X index 0; "q" for Q.
  std::string name() const {
    if (kind == VarKind::Q) return "q";
    return std::string(kind_name(kind)) + std::to_string(index + 1);
  }
};

inline VarId var(VarKind kind, std::uint32_t index) { return VarId{kind, index}; }
inline VarId qvar() { return VarId{VarKind::Q, 0}; }

/// n consecutive variables of one kind, indices 0..n-1.
inline std::vector<VarId> alphabet(VarKind kind, std::size_t n) {
  std::vector<VarId> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(VarId{kind, static_cast<std::uint32_t>(i)});
  return out;
}

/// Product of variable powers; factors sorted by VarId with nonzero exponents.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  explicit Monomial(VarId v, int exp = 1) {
    if (exp != 0) factors_.emplace_back(v, exp);
  }
  /// Builds from arbitrary factors, merging repeats.
  explicit Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (const auto& f : factors) {
      if (!factors_.empty() && factors_.back().first == f.first)
        factors_.back().second += f.second;
      else
        factors_.push_back(f);
      if (factors_.back().second == 0) factors_.pop_back();
    }
  }

  bool is_one() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }

  int exponent(VarId v) const {
    for (const auto& [id, e] : factors_)
      if (id == v) return e;
    return 0;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
      if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        out.factors_.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        out.factors_.push_back(*b++);
      } else {
        int e = a->second + b->second;
        if (e != 0) out.factors_.emplace_back(a->first, e);
        ++a;
        ++b;
      }
    }
    return out;
  }

  Monomial pow(int k) const {
    Monomial out;
    if (k == 0) return out;
    out.factors_ = factors_;
    for (auto& f : out.factors_) f.second *= k;
    return out;
  }

  /// The factors of the given kind only, and the rest.
  std::pair<Monomial, Monomial> split(VarKind kind) const {
    Monomial in, out;
    for (const auto& f : factors_) (f.first.kind == kind ? in : out).factors_.push_back(f);
    return {in, out};
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Degree weights per variable kind; the graded degree of a monomial is
/// Σ weight(kind)·exponent.
struct Grading {
  std::array<int, kVarKinds> weights{1, 1, 1, 1, 1, 1, 1};

  static Grading uniform() { return {}; }

  /// Only Q carries degree (one unit per q^{1/2}).
  static Grading q_only() {
    Grading g;
    g.weights.fill(0);
    g.weights[static_cast<std::size_t>(VarKind::Q)] = 1;
    return g;
  }

  Grading with(VarKind k, int w) const {
    Grading g = *this;
    g.weights[static_cast<std::size_t>(k)] = w;
    return g;
  }

  int weight(VarKind k) const { return weights[static_cast<std::size_t>(k)]; }

  int degree(const Monomial& m) const {
    int d = 0;
    for (const auto& [v, e] : m.factors()) d += weight(v.kind) * e;
    return d;
  }

  bool operator==(const Grading&) const = default;
};

/// Discard every monomial whose graded degree exceeds max_degree.
struct Truncation {
  int max_degree = 0;
  Grading grading;

  bool keeps(const Monomial& m) const { return grading.degree(m) <= max_degree; }
  bool operator==(const Truncation&) const = default;
};

namespace detail {

inline std::optional<Truncation> meet(const std::optional<Truncation>& a,
                                      const std::optional<Truncation>& b) {
  if (!a) return b;
  if (!b) return a;
  if (!(a->grading == b->grading)) throw std::invalid_argument("truncations use different gradings");
  return Truncation{std::min(a->max_degree, b->max_degree), a->grading};
}

}  // namespace detail

/// Sparse Laurent polynomial with exact integer coefficients and an optional
/// graded truncation.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::optional<Truncation> t) : trunc_(std::move(t)) {}

  static LaurentPoly constant(const Integer& c, std::optional<Truncation> t = std::nullopt) {
    LaurentPoly p(std::move(t));
    p.add_term(Monomial{}, c);
    return p;
  }
  static LaurentPoly one(std::optional<Truncation> t = std::nullopt) { return constant(1, std::move(t)); }
  static LaurentPoly monomial(const Monomial& m, const Integer& c = 1,
                              std::optional<Truncation> t = std::nullopt) {
    LaurentPoly p(std::move(t));
    p.add_term(m, c);
    return p;
  }
  static LaurentPoly variable(VarId v) { return monomial(Monomial(v)); }

  const Terms& terms() const { return terms_; }
  const std::optional<Truncation>& truncation() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds c·m; dropped when m lies above the truncation.
  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    if (trunc_ && !trunc_->keeps(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Copy with an extra (or tighter) truncation applied.
  LaurentPoly truncated(const Truncation& t) const {
    LaurentPoly out(detail::meet(trunc_, t));
    for (const auto& [m, c] : terms_)
      if (out.trunc_->keeps(m)) out.terms_.emplace(m, c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    trunc_ = detail::meet(trunc_, o.trunc_);
    if (trunc_) drop_above_truncation();
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    trunc_ = detail::meet(trunc_, o.trunc_);
    if (trunc_) drop_above_truncation();
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& k) { return a *= k; }

  /// Exact product; terms above the tighter of the two truncations are dropped.
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(detail::meet(a.trunc_, b.trunc_));
    if (!out.trunc_) {
      for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
      return out;
    }
    // b sorted by degree: the inner loop stops at the first term over the bound.
    const auto& g = out.trunc_->grading;
    std::vector<std::pair<int, const Terms::value_type*>> bs;
    bs.reserve(b.terms_.size());
    for (const auto& t : b.terms_) bs.emplace_back(g.degree(t.first), &t);
    std::sort(bs.begin(), bs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [ma, ca] : a.terms_) {
      int da = g.degree(ma);
      for (const auto& [db, tb] : bs) {
        if (da + db > out.trunc_->max_degree) break;
        out.add_term(ma * tb->first, ca * tb->second);
      }
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Sum of coefficients of monomials whose factor-of-`kind` part is exactly `key`,
  /// with that part removed.  E.g. the x^λ coefficient of a series in x.
  LaurentPoly coefficient_of(VarKind kind, const Monomial& key) const {
    LaurentPoly out(trunc_);
    for (const auto& [m, c] : terms_) {
      auto [in, rest] = m.split(kind);
      if (in == key) out.add_term(rest, c);
    }
    return out;
  }

  /// Groups terms by their factor of `kind`: key ↦ remaining polynomial.
  std::map<Monomial, LaurentPoly> group_by(VarKind kind) const {
    std::map<Monomial, LaurentPoly> out;
    for (const auto& [m, c] : terms_) {
      auto [in, rest] = m.split(kind);
      auto [it, inserted] = out.try_emplace(in, trunc_);
      it->second.add_term(rest, c);
    }
    return out;
  }

 private:
  void drop_above_truncation() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = trunc_->keeps(it->first) ? std::next(it) : terms_.erase(it);
  }

  Terms terms_;
  std::optional<Truncation> trunc_;
};

enum class FactorSign { Plus, Minus };

/// Minus: Σ_{k=0}^{max_power} m^k, the expansion of (1 − m)^{-1}. Plus: 1 + m.
inline LaurentPoly geometric_factor(const Monomial& m, FactorSign sign, int max_power) {
  if (max_power < 0) throw std::invalid_argument("geometric_factor: negative truncation");
  LaurentPoly out = LaurentPoly::one();
  if (sign == FactorSign::Plus) {
    out.add_term(m, 1);
    return out;
  }
  for (int k = 1; k <= max_power; ++k) out.add_term(m.pow(k), 1);
  return out;
}

inline LaurentPoly geometric_factor(VarId v, FactorSign sign, int max_power) {
  return geometric_factor(Monomial(v), sign, max_power);
}

/// Substitutes a monomial for each listed variable; other variables are kept.
inline LaurentPoly substitute(const LaurentPoly& p, const std::map<VarId, Monomial>& images,
                              std::optional<Truncation> t = std::nullopt) {
  LaurentPoly out(std::move(t));
  for (const auto& [m, c] : p.terms()) {
    Monomial image;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      image = image * (it == images.end() ? Monomial(v, e) : it->second.pow(e));
    }
    out.add_term(image, c);
  }
  return out;
}

}  // namespace hooksym

#endif  // HOOKSYM_POLYRING_HPP
