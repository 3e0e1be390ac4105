#ifndef HOOKSYM_FORMAT_HPP
#define HOOKSYM_FORMAT_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "integer.hpp"
#include "partitions.hpp"
#include "polyring.hpp"
#include "series.hpp"

namespace hooksym {

using json = nlohmann::json;

namespace detail {

inline std::string power_text(const VarId& v, int e) {
  if (v.kind == VarKind::Q) {
    HalfInt h = HalfInt::from_twice(e);
    if (h == HalfInt::whole(1)) return "q";
    return h.is_integer() ? "q^" + h.str() : "q^(" + h.str() + ")";
  }
  if (e == 1) return v.name();
  return v.name() + "^" + std::to_string(e);
}

inline std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += power_text(v, e);
  }
  return out;
}

inline std::string term_text(const Integer& c, const std::string& mono, bool first) {
  std::string out;
  Integer mag = c < 0 ? Integer(-c) : c;
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (mono.empty()) return out + mag.str();
  if (mag != 1) out += mag.str() + "*";
  return out + mono;
}

inline int plain_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m.factors()) d += e;
  return d;
}

/// Total degree ascending, then lexicographically descending exponent vectors
/// (variables in VarId order).
inline bool display_before(const Monomial& a, const Monomial& b) {
  int da = plain_degree(a), db = plain_degree(b);
  if (da != db) return da < db;
  auto ia = a.factors().begin(), ib = b.factors().begin();
  while (ia != a.factors().end() || ib != b.factors().end()) {
    if (ib == b.factors().end() || (ia != a.factors().end() && ia->first < ib->first)) return ia->second > 0;
    if (ia == a.factors().end() || ib->first < ia->first) return ib->second < 0;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

}  // namespace detail

/// Terms of p in display order.
inline std::vector<std::pair<Monomial, Integer>> sorted_terms(const LaurentPoly& p) {
  std::vector<std::pair<Monomial, Integer>> out(p.terms().begin(), p.terms().end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return detail::display_before(a.first, b.first); });
  return out;
}

/// Canonical text: "x1^2 + x1*y1", "0" for the zero polynomial.
inline std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p)) {
    out += detail::term_text(c, detail::monomial_text(m), first);
    first = false;
  }
  return out;
}

inline std::string monomial_key(const Monomial& m) {
  return m.is_one() ? std::string("1") : detail::monomial_text(m);
}

/// [{"monomial": {"x1": 2, "y1": 1}, "coeff": "3"}, ...]; the q exponent is
/// reported doubled under the key "q_twice".
inline json to_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& [m, c] : sorted_terms(p)) {
    json mono = json::object();
    for (const auto& [v, e] : m.factors()) mono[v.kind == VarKind::Q ? std::string("q_twice") : v.name()] = e;
    arr.push_back({{"monomial", mono}, {"coeff", c.str()}});
  }
  return arr;
}

/// "1 - q^(1/2) + q + O(q^(3/2))".
inline std::string render(const HalfSeries& s, bool with_order = true) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < s.dense().size(); ++i) {
    const Integer& c = s.dense()[i];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : detail::power_text(qvar(), static_cast<int>(i));
    out += detail::term_text(c, mono, first);
    first = false;
  }
  if (first) out = "0";
  if (with_order) out += " + O(" + detail::power_text(qvar(), s.order().twice() + 1) + ")";
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << render(p); }
inline std::ostream& operator<<(std::ostream& os, const HalfSeries& s) { return os << render(s); }

inline json to_json(const HalfSeries& s) {
  json coeffs = json::object();
  for (std::size_t i = 0; i < s.dense().size(); ++i)
    if (s.dense()[i] != 0) coeffs[HalfInt::from_twice(static_cast<int>(i)).str()] = s.dense()[i].str();
  return {{"order", s.order().str()}, {"coeffs", coeffs}};
}

/// One "key: value" line per entry of a coefficient table.
template <class Key>
std::string render_table(const std::map<Key, Integer>& table) {
  std::string out;
  for (const auto& [k, v] : table) out += to_string(k) + ": " + v.str() + "\n";
  return out;
}

template <class Key>
json table_to_json(const std::map<Key, Integer>& table) {
  json arr = json::array();
  for (const auto& [k, v] : table) arr.push_back({{"shape", k.parts()}, {"multiplicity", v.str()}});
  return arr;
}

}  // namespace hooksym

#endif  // HOOKSYM_FORMAT_HPP
