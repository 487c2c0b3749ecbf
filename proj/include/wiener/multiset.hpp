#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wiener {

struct ValueCount {
  std::int64_t value;
  std::int64_t count;

  friend bool operator==(const ValueCount&, const ValueCount&) = default;
};

// Multiset of positive integers stored as (value, multiplicity) pairs with
// values strictly decreasing: a_s > a_{s-1} > ... > a_1 >= 1. This is the
// decremented degree sequence of a tree when it comes from one.
class ValueMultiset {
 public:
  ValueMultiset() = default;
  // Throws InvalidMultiset unless values are >= 1, strictly decreasing, and
  // every multiplicity is >= 1.
  explicit ValueMultiset(std::vector<ValueCount> pairs);

  // Groups arbitrary positive entries.
  static ValueMultiset from_values(std::span<const std::int64_t> values);

  const std::vector<ValueCount>& pairs() const { return pairs_; }
  // Number of distinct values.
  std::size_t distinct() const { return pairs_.size(); }
  // Total multiplicity.
  std::size_t size() const { return size_; }
  bool empty() const { return pairs_.empty(); }

  // All copies, nonincreasing.
  std::vector<std::int64_t> expand() const;

  // "7:3,2:2,1:2"
  std::string to_string() const;

  friend bool operator==(const ValueMultiset&, const ValueMultiset&) = default;

 private:
  std::vector<ValueCount> pairs_;
  std::size_t size_ = 0;
};

}  // namespace wiener
