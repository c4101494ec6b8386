#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace jetvar {

/// Derivative counts N = (n_1, ..., n_p) indexing jet coordinates and
/// iterated total derivatives. The base dimension p is carried explicitly so
/// that mixing indices of different spaces is caught at the boundary.
///
/// Ordering is graded: first by total order |N|, then lexicographically on
/// the counts. All coefficient listings in the library follow this order.
class MultiIndex {
 public:
  /// The zero index in dimension p.
  explicit MultiIndex(std::size_t p);
  explicit MultiIndex(std::vector<int> counts);
  MultiIndex(std::initializer_list<int> counts);

  /// 1_i: one derivative along axis (0-based).
  static MultiIndex unit(std::size_t p, std::size_t axis);

  std::size_t dim() const { return counts_.size(); }
  int operator[](std::size_t axis) const { return counts_[axis]; }
  const std::vector<int>& counts() const { return counts_; }

  /// |N| = sum of counts.
  int order() const { return order_; }
  /// N! = product of count factorials.
  std::uint64_t factorial() const;

  /// N +/- 1_axis. Throws DecrementBelowZero when a zero count would go
  /// negative; throws std::out_of_range on a bad axis.
  MultiIndex shifted(std::size_t axis, int delta) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; throws DecrementBelowZero unless other <= *this.
  MultiIndex operator-(const MultiIndex& other) const;

  bool operator==(const MultiIndex& other) const = default;
  std::strong_ordering operator<=>(const MultiIndex& other) const;

 private:
  std::vector<int> counts_;
  int order_ = 0;
};

/// Componentwise M <= N. Throws DimensionMismatch when the dimensions differ.
bool leq(const MultiIndex& lhs, const MultiIndex& rhs);

/// All N with |N| <= max_order in ascending graded order; C(p + max_order, p)
/// entries.
std::vector<MultiIndex> enumerate_multi_indices(std::size_t p, int max_order);

}  // namespace jetvar
