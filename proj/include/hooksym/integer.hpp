#ifndef HOOKSYM_INTEGER_HPP
#define HOOKSYM_INTEGER_HPP

#include <compare>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hooksym {

/// Arbitrary-precision coefficient type used by every polynomial and series.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& v) { return v.str(); }

/// A number in ½ℤ stored as twice its value.
///
/// Used for q-exponents, indices of the half-integer lattice and the energy
/// shift h(λ).
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt whole(int n) { return HalfInt(2 * n); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3/2", "-1/2", "2".
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  /// Parses "3", "-2", "5/2".
  static HalfInt parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return whole(std::stoi(s));
      if (s.substr(slash + 1) != "2") throw std::invalid_argument("denominator must be 2");
      return from_twice(std::stoi(s.substr(0, slash)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("not a half-integer: '" + s + "'");
    }
  }

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace hooksym

#endif  // HOOKSYM_INTEGER_HPP
