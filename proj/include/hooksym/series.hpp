#ifndef HOOKSYM_SERIES_HPP
#define HOOKSYM_SERIES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer.hpp"
#include "polyring.hpp"

namespace hooksym {

/// Truncated power series in q with exponents in ½ℤ₊.
///
/// Coefficients are stored densely by doubled exponent; the series is exact
/// through q^{order}, and nothing above that order is ever reported.
class HalfSeries {
 public:
  explicit HalfSeries(HalfInt order) : coeffs_(checked_size(order), Integer(0)) {}

  static HalfSeries constant(const Integer& c, HalfInt order) {
    HalfSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static HalfSeries one(HalfInt order) { return constant(1, order); }
  /// c·q^{e}; zero when e is above the order.
  static HalfSeries monomial(HalfInt e, const Integer& c, HalfInt order) {
    HalfSeries s(order);
    s.add(e, c);
    return s;
  }

  HalfInt order() const { return HalfInt::from_twice(static_cast<int>(coeffs_.size()) - 1); }

  Integer coefficient(HalfInt e) const {
    if (e.twice() < 0 || e.twice() >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(e.twice())];
  }
  const std::vector<Integer>& dense() const { return coeffs_; }

  /// Adds c·q^{e}; ignored above the order.
  void add(HalfInt e, const Integer& c) {
    if (e.twice() < 0) throw std::invalid_argument("HalfSeries: negative exponent");
    if (e.twice() < static_cast<int>(coeffs_.size())) coeffs_[static_cast<std::size_t>(e.twice())] += c;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
  }

  /// Same series known only through a lower order.
  HalfSeries truncated(HalfInt order) const {
    HalfSeries out(std::min(order, this->order()));
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
  }

  /// q^{shift}·s.  A negative shift lowers the order by the same amount and
  /// requires the vanishing of every coefficient that would move below q^0.
  HalfSeries shifted(HalfInt shift) const {
    HalfInt new_order = order() + shift;
    if (new_order.twice() < 0) throw std::invalid_argument("HalfSeries: shift leaves nothing exact");
    HalfSeries out(new_order);
    for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
      int j = i + shift.twice();
      if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
      if (j < 0) throw std::domain_error("HalfSeries: shift produces a negative power of q");
      out.coeffs_[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return out;
  }

  HalfSeries& operator+=(const HalfSeries& o) {
    resize_to(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  HalfSeries& operator-=(const HalfSeries& o) {
    resize_to(std::min(order(), o.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  HalfSeries& operator*=(const Integer& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
  }
  friend HalfSeries operator+(HalfSeries a, const HalfSeries& b) { return a += b; }
  friend HalfSeries operator-(HalfSeries a, const HalfSeries& b) { return a -= b; }
  friend HalfSeries operator*(HalfSeries a, const Integer& k) { return a *= k; }

  /// Cauchy product; the order is the smaller of the two.
  friend HalfSeries operator*(const HalfSeries& a, const HalfSeries& b) {
    HalfSeries out(std::min(a.order(), b.order()));
    const std::size_t n = out.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j)
        if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  HalfSeries& operator*=(const HalfSeries& o) { return *this = *this * o; }

  /// Coefficient-wise equality at the common order.
  friend bool operator==(const HalfSeries& a, const HalfSeries& b) {
    if (a.order() != b.order()) return false;
    return a.coeffs_ == b.coeffs_;
  }

 private:
  static std::size_t checked_size(HalfInt order) {
    if (order.twice() < 0) throw std::invalid_argument("HalfSeries: negative order");
    return static_cast<std::size_t>(order.twice()) + 1;
  }
  void resize_to(HalfInt order) { coeffs_.resize(checked_size(order)); }

  std::vector<Integer> coeffs_;
};

inline HalfSeries series_mul(const HalfSeries& a, const HalfSeries& b) { return a * b; }

/// Multiplicative inverse of a series whose constant term is ±1.
inline HalfSeries series_inv_unit(const HalfSeries& a) {
  const Integer c0 = a.coefficient(HalfInt{});
  if (c0 != 1 && c0 != -1) throw std::domain_error("series_inv_unit: constant term is not a unit");
  const auto& ac = a.dense();
  HalfSeries out(a.order());
  std::vector<Integer> b(ac.size(), Integer(0));
  b[0] = c0;  // 1/c0 = c0 for c0 = ±1
  for (std::size_t n = 1; n < ac.size(); ++n) {
    Integer acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (ac[k] != 0) acc += ac[k] * b[n - k];
    b[n] = -c0 * acc;
  }
  for (std::size_t n = 0; n < b.size(); ++n) out.add(HalfInt::from_twice(static_cast<int>(n)), b[n]);
  return out;
}

/// Ring homomorphism sending each variable to a series.  A negative exponent
/// uses the series inverse, which must exist.  The result is exact through the
/// smallest order among the assigned series (or `order`, when given and lower).
inline HalfSeries specialize(const LaurentPoly& p, const std::map<VarId, HalfSeries>& assignment,
                             std::optional<HalfInt> order_cap = std::nullopt) {
  std::optional<HalfInt> min_order = order_cap;
  for (const auto& [v, s] : assignment) min_order = min_order ? std::min(*min_order, s.order()) : s.order();
  if (!min_order) throw std::invalid_argument("specialize: no series assigned and no order given");
  const HalfInt order = *min_order;

  std::map<VarId, HalfSeries> inverses;
  HalfSeries out(order);
  for (const auto& [m, c] : p.terms()) {
    HalfSeries term = HalfSeries::constant(c, order);
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw std::invalid_argument("specialize: variable " + v.name() + " is unassigned");
      const HalfSeries* base = &it->second;
      if (e < 0) {
        auto inv = inverses.find(v);
        if (inv == inverses.end()) inv = inverses.emplace(v, series_inv_unit(it->second)).first;
        base = &inv->second;
      }
      for (int k = 0; k < std::abs(e); ++k) term *= *base;
    }
    out += term;
  }
  return out;
}

}  // namespace hooksym

#endif  // HOOKSYM_SERIES_HPP
