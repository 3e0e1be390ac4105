#ifndef HOOKSYM_PARTITIONS_HPP
#define HOOKSYM_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hooksym {

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// A weakly decreasing integer sequence of a fixed declared length l.
///
/// Zeros are kept: the rank l matters for Λ(λ) and for determinant shifts.
class GeneralizedPartition {
 public:
  GeneralizedPartition() = default;

  explicit GeneralizedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i)
      if (parts_[i] > parts_[i - 1])
        throw std::invalid_argument("generalized partition parts must be weakly decreasing");
  }

  GeneralizedPartition(std::initializer_list<int> parts)
      : GeneralizedPartition(std::vector<int>(parts)) {}

  /// Embeds a partition into rank l, padding with zeros.
  static GeneralizedPartition of(const Partition& p, std::size_t rank) {
    if (p.length() > rank) throw std::invalid_argument("partition longer than the rank");
    std::vector<int> parts(rank, 0);
    std::copy(p.parts().begin(), p.parts().end(), parts.begin());
    return GeneralizedPartition(std::move(parts));
  }

  /// Declared length l.
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_.at(i); }
  const std::vector<int>& parts() const { return parts_; }

  int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  int last() const { return parts_.empty() ? 0 : parts_.back(); }

  bool is_partition() const { return parts_.empty() || parts_.back() >= 0; }

  Partition to_partition() const { return Partition(parts_); }

  /// λ + d·1_l.
  GeneralizedPartition shifted(int d) const {
    auto parts = parts_;
    for (auto& p : parts) p += d;
    return GeneralizedPartition(std::move(parts));
  }

  /// (−λ_l, …, −λ_1): highest weight of the dual module.
  GeneralizedPartition dual() const {
    std::vector<int> parts(parts_.rbegin(), parts_.rend());
    for (auto& p : parts) p = -p;
    return GeneralizedPartition(std::move(parts));
  }

  auto operator<=>(const GeneralizedPartition&) const = default;
  bool operator==(const GeneralizedPartition&) const = default;

 private:
  std::vector<int> parts_;
};

/// outer/inner with inner ⊆ outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition o, Partition i);

  int size() const { return outer.size() - inner.size(); }
};

/// True iff inner[i] ≤ outer[i] for every row.
inline bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

inline SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
  if (!contains(outer, inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : p[0], 0);
  for (int row : p.parts())
    for (int j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

/// Length of column j of a generalized partition.
///
/// Columns 1, 2, … lie right of the origin and count rows reaching them.
/// Columns 0, −1, … lie left of it and carry non-positive length: minus the
/// number of rows whose (negative) boxes cover that column.  For
/// (5,3,2,1,−1,−2): column −1 → −1, column 0 → −2, column 1 → 4.
inline int gen_column_length(const GeneralizedPartition& gp, int j) {
  int count = 0;
  if (j >= 1) {
    for (int part : gp.parts())
      if (part >= j) ++count;
    return count;
  }
  for (int part : gp.parts())
    if (part <= j - 1) ++count;
  return -count;
}

namespace detail {

inline void partitions_of(int n, int max_part, int max_len, std::vector<int>& cur,
                          std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Partitions of a fixed size with at most max_length parts, lexicographically
/// descending.
inline std::vector<Partition> partitions_of_size(int n, int max_length) {
  std::vector<Partition> out;
  if (n < 0 || max_length < 0) return out;
  std::vector<int> cur;
  detail::partitions_of(n, n, max_length, cur, out);
  return out;
}

/// All partitions with size ≤ max_size and length ≤ max_length, ordered by size
/// and then lexicographically descending.
inline std::vector<Partition> enumerate_partitions(int max_size, int max_length) {
  if (max_size < 0 || max_length < 0) throw std::invalid_argument("enumerate_partitions: negative bound");
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of_size(n, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// All weakly decreasing integer tuples of the given length with |part| ≤ max_abs,
/// in lexicographically ascending order.
inline std::vector<GeneralizedPartition> enumerate_generalized(int max_abs, int length) {
  if (max_abs < 0 || length < 1) throw std::invalid_argument("enumerate_generalized: bad bounds");
  std::vector<GeneralizedPartition> out;
  std::vector<int> cur(static_cast<std::size_t>(length));
  // Fill from the last part upward so the first part varies slowest.
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos < 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= max_abs; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos - 1, v);
    }
  };
  rec(length - 1, -max_abs);
  std::sort(out.begin(), out.end());
  return out;
}

// Text syntax: comma-separated integers; "" and "0" denote the empty partition.

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed partition '" + text + "'");
    }
    if (used != item.size()) throw std::invalid_argument("malformed partition '" + text + "'");
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("malformed partition '" + text + "'");
  return out;
}

inline Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

/// Parses a generalized partition and pads it with zeros up to `rank` (when given).
inline GeneralizedPartition parse_generalized(const std::string& text, std::size_t rank = 0) {
  auto parts = parse_int_list(text);
  if (rank == 0) rank = std::max<std::size_t>(parts.size(), 1);
  if (parts.size() > rank) throw std::invalid_argument("'" + text + "' has more parts than the rank");
  // Zeros are inserted between the nonnegative and negative parts.
  auto first_negative = std::find_if(parts.begin(), parts.end(), [](int v) { return v < 0; });
  parts.insert(first_negative, rank - parts.size(), 0);
  return GeneralizedPartition(std::move(parts));
}

inline std::string to_string(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

inline std::string to_string(const Partition& p) { return to_string(p.parts()); }
inline std::string to_string(const GeneralizedPartition& p) { return to_string(p.parts()); }

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const GeneralizedPartition& p) {
  return os << to_string(p);
}

}  // namespace hooksym

#endif  // HOOKSYM_PARTITIONS_HPP
