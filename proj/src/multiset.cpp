#include "wiener/multiset.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wiener/error.hpp"

namespace wiener {

ValueMultiset::ValueMultiset(std::vector<ValueCount> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    if (p.value < 1) {
      throw InvalidMultiset("value " + std::to_string(p.value) + " is not positive");
    }
    if (p.count < 1) {
      throw InvalidMultiset("multiplicity of value " + std::to_string(p.value) + " is not positive");
    }
    if (i > 0 && pairs_[i - 1].value <= p.value) {
      throw InvalidMultiset("values must be strictly decreasing");
    }
    size_ += static_cast<std::size_t>(p.count);
  }
}

ValueMultiset ValueMultiset::from_values(std::span<const std::int64_t> values) {
  std::map<std::int64_t, std::int64_t, std::greater<>> counts;
  for (auto v : values) {
    ++counts[v];
  }
  std::vector<ValueCount> pairs;
  pairs.reserve(counts.size());
  for (auto [v, c] : counts) {
    pairs.push_back({v, c});
  }
  return ValueMultiset(std::move(pairs));
}

std::vector<std::int64_t> ValueMultiset::expand() const {
  std::vector<std::int64_t> out;
  out.reserve(size_);
  for (const auto& p : pairs_) {
    out.insert(out.end(), static_cast<std::size_t>(p.count), p.value);
  }
  return out;
}

std::string ValueMultiset::to_string() const {
  std::string out;
  for (const auto& p : pairs_) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(p.value) + ":" + std::to_string(p.count);
  }
  return out;
}

}  // namespace wiener
