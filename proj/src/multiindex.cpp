#include "jetvar/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "jetvar/error.hpp"

namespace jetvar {

MultiIndex::MultiIndex(std::size_t p) : counts_(p, 0) {
  if (p == 0) throw std::invalid_argument("multi-index dimension must be positive");
}

MultiIndex::MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("multi-index dimension must be positive");
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("multi-index counts must be non-negative");
    order_ += c;
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> counts) : MultiIndex(std::vector<int>(counts)) {}

MultiIndex MultiIndex::unit(std::size_t p, std::size_t axis) {
  return MultiIndex(p).shifted(axis, +1);
}

std::uint64_t MultiIndex::factorial() const {
  std::uint64_t f = 1;
  for (int c : counts_)
    for (int k = 2; k <= c; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

MultiIndex MultiIndex::shifted(std::size_t axis, int delta) const {
  if (axis >= counts_.size()) throw std::out_of_range("multi-index axis out of range");
  if (delta != 1 && delta != -1) throw std::invalid_argument("multi-index shift must be +1 or -1");
  if (delta < 0 && counts_[axis] == 0)
    throw DecrementBelowZero("cannot lower count " + std::to_string(axis + 1) + " below zero");
  MultiIndex out = *this;
  out.counts_[axis] += delta;
  out.order_ += delta;
  return out;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("multi-index dimensions differ");
  MultiIndex out = *this;
  for (std::size_t i = 0; i < dim(); ++i) out.counts_[i] += other.counts_[i];
  out.order_ += other.order_;
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!leq(other, *this)) throw DecrementBelowZero("multi-index difference would be negative");
  MultiIndex out = *this;
  for (std::size_t i = 0; i < dim(); ++i) out.counts_[i] -= other.counts_[i];
  out.order_ -= other.order_;
  return out;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = dim() <=> other.dim(); c != 0) return c;
  if (auto c = order_ <=> other.order_; c != 0) return c;
  return counts_ <=> other.counts_;
}

bool leq(const MultiIndex& lhs, const MultiIndex& rhs) {
  if (lhs.dim() != rhs.dim())
    throw DimensionMismatch("comparing multi-indices of dimension " + std::to_string(lhs.dim()) +
                            " and " + std::to_string(rhs.dim()));
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    if (lhs[i] > rhs[i]) return false;
  return true;
}

namespace {

void fill_order(std::size_t axis, int remaining, std::vector<int>& counts,
                std::vector<MultiIndex>& out) {
  if (axis + 1 == counts.size()) {
    counts[axis] = remaining;
    out.emplace_back(counts);
    return;
  }
  // lexicographic: smallest leading count first
  for (int c = 0; c <= remaining; ++c) {
    counts[axis] = c;
    fill_order(axis + 1, remaining - c, counts, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(std::size_t p, int max_order) {
  if (p == 0) throw std::invalid_argument("multi-index dimension must be positive");
  std::vector<MultiIndex> out;
  std::vector<int> counts(p, 0);
  for (int k = 0; k <= max_order; ++k) fill_order(0, k, counts, out);
  return out;
}

}  // namespace jetvar
