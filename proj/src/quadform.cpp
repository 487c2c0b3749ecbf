#include "wiener/quadform.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wiener/error.hpp"

namespace wiener {

namespace {

__extension__ using Wide = __int128;

bool is_canonical(std::span<const std::int64_t> x) {
  const std::size_t k = x.size();
  for (std::size_t i = 0; i < k / 2; ++i) {
    const auto front = x[i];
    const auto back = x[k - 1 - i];
    if (front != back) {
      return front > back;
    }
  }
  return true;
}

Wide q_wide(std::span<const std::int64_t> x) {
  // sum_j x_j sum_{i<j} (j-i) x_i = sum_j x_j (j * P_j - Q_j) with prefix sums
  // P_j = sum_{i<j} x_i and Q_j = sum_{i<j} i x_i.
  Wide total = 0;
  Wide prefix = 0;
  Wide weighted = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Wide xj = x[j];
    total += xj * (static_cast<Wide>(j) * prefix - weighted);
    prefix += xj;
    weighted += static_cast<Wide>(j) * xj;
  }
  return total;
}

// q without validation; callers guarantee small positive entries.
std::int64_t q_unchecked(std::span<const std::int64_t> x) { return static_cast<std::int64_t>(q_wide(x)); }

}  // namespace

void check_arrangement(std::span<const std::int64_t> x) {
  if (x.empty()) {
    throw InvalidArrangement("arrangement is empty");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 1) {
      throw InvalidArrangement("entry x_" + std::to_string(i + 1) + " = " + std::to_string(x[i]) + " is below 1");
    }
  }
}

std::int64_t q_value(std::span<const std::int64_t> x) {
  check_arrangement(x);
  // Bound the terms so that the 128-bit accumulation cannot wrap.
  const auto max_entry = *std::max_element(x.begin(), x.end());
  if (x.size() > (std::size_t{1} << 20) || max_entry > (std::int64_t{1} << 30)) {
    throw SizeError("arrangement too large for 64-bit q");
  }
  const Wide total = q_wide(x);
  if (total > std::numeric_limits<std::int64_t>::max()) {
    throw SizeError("q(x) overflows a 64-bit integer");
  }
  return static_cast<std::int64_t>(total);
}

HalfDistanceMatrix::HalfDistanceMatrix(std::size_t k) : k_(k), doubled_(k * k) {
  if (k == 0) {
    throw DomainError("matrix dimension must be positive");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      doubled_[i * k + j] = static_cast<std::int64_t>(i > j ? i - j : j - i);
    }
  }
}

HalfDistanceMatrix a_matrix(std::size_t k) { return HalfDistanceMatrix(k); }

namespace {

// Outer blocks (all values but the smallest) with l_i copies on the left.
Arrangement split_with(const ValueMultiset& b, std::span<const std::int64_t> left_counts) {
  const auto& pairs = b.pairs();
  Arrangement left;
  Arrangement right;
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    left.insert(left.end(), static_cast<std::size_t>(left_counts[i]), pairs[i].value);
  }
  for (std::size_t i = pairs.size() - 1; i-- > 0;) {
    right.insert(right.end(), static_cast<std::size_t>(pairs[i].count - left_counts[i]), pairs[i].value);
  }
  Arrangement x = std::move(left);
  x.insert(x.end(), static_cast<std::size_t>(pairs.back().count), pairs.back().value);
  x.insert(x.end(), right.begin(), right.end());
  return x;
}

}  // namespace

Arrangement symmetric_split_arrangement(const ValueMultiset& b) {
  if (b.empty()) {
    throw InvalidMultiset("multiset is empty");
  }
  std::vector<std::int64_t> left_counts;
  for (std::size_t i = 0; i + 1 < b.distinct(); ++i) {
    left_counts.push_back((b.pairs()[i].count + 1) / 2);
  }
  return split_with(b, left_counts);
}

Arrangement best_symmetric_split(const ValueMultiset& b) {
  if (b.empty()) {
    throw InvalidMultiset("multiset is empty");
  }
  std::vector<std::size_t> odd;
  std::vector<std::int64_t> left_counts;
  for (std::size_t i = 0; i + 1 < b.distinct(); ++i) {
    const auto m = b.pairs()[i].count;
    left_counts.push_back((m + 1) / 2);
    if (m % 2 == 1) {
      odd.push_back(i);
    }
  }
  if (odd.size() > 20) {
    throw SizeError("too many odd multiplicities to enumerate splits");
  }

  Arrangement best = split_with(b, left_counts);
  std::int64_t best_q = q_unchecked(best);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << odd.size()); ++mask) {
    auto counts = left_counts;
    for (std::size_t bit = 0; bit < odd.size(); ++bit) {
      if (mask & (std::uint32_t{1} << bit)) {
        counts[odd[bit]] -= 1;
      }
    }
    Arrangement x = split_with(b, counts);
    const auto q = q_unchecked(x);
    if (q > best_q) {
      best_q = q;
      best = std::move(x);
    }
  }
  return best;
}

bool has_dominant_odd_value(const ValueMultiset& b) {
  if (b.distinct() < 2) {
    return false;
  }
  const auto& pairs = b.pairs();
  if (pairs[0].count % 2 == 0) {
    return false;
  }
  Wide rest = 0;
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    rest += static_cast<Wide>(pairs[i].count) * pairs[i].value;
  }
  return pairs[0].value > rest;
}

Arrangement dominant_odd_arrangement(const ValueMultiset& b) {
  if (b.distinct() < 2) {
    throw PreconditionError("dominant-odd arrangement needs at least two distinct values (s >= 2)");
  }
  const auto& pairs = b.pairs();
  const auto dominant = pairs[0];
  if (dominant.count % 2 == 0) {
    throw PreconditionError("multiplicity of the largest value must be odd (m_s = 2h+1), got " +
                            std::to_string(dominant.count));
  }
  if (!has_dominant_odd_value(b)) {
    throw PreconditionError("largest value " + std::to_string(dominant.value) +
                            " must exceed the weighted sum of the other values");
  }
  const auto h = static_cast<std::size_t>(dominant.count / 2);
  Arrangement x(h + 1, dominant.value);
  for (std::size_t i = pairs.size(); i-- > 1;) {
    x.insert(x.end(), static_cast<std::size_t>(pairs[i].count), pairs[i].value);
  }
  x.insert(x.end(), h, dominant.value);
  return x;
}

std::optional<std::size_t> satisfies_necessary_shape(std::span<const std::int64_t> x) {
  const std::size_t k = x.size();
  if (k < 4) {
    return std::nullopt;
  }
  // 1-based views: value(i) = x_i, sum(a, b) = x_a + ... + x_b.
  std::vector<std::int64_t> prefix(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    prefix[i + 1] = prefix[i] + x[i];
  }
  auto value = [&](std::size_t i) { return x[i - 1]; };
  auto sum = [&](std::size_t a, std::size_t b) { return a > b ? std::int64_t{0} : prefix[b] - prefix[a - 1]; };

  // descending_to[j]: x_1 >= ... >= x_j.  ascending_from[j]: x_j <= ... <= x_k.
  std::vector<bool> descending_to(k + 1, true);
  for (std::size_t j = 2; j <= k; ++j) {
    descending_to[j] = descending_to[j - 1] && value(j - 1) >= value(j);
  }
  std::vector<bool> ascending_from(k + 2, true);
  for (std::size_t j = k - 1; j >= 1; --j) {
    ascending_from[j] = ascending_from[j + 1] && value(j) <= value(j + 1);
  }

  for (std::size_t t = 2; t + 2 <= k; ++t) {
    const bool balance = sum(1, t - 2) <= sum(t + 1, k) && sum(1, t - 1) > sum(t + 2, k);
    if (!balance) {
      continue;
    }
    const bool valley_at_t = descending_to[t] && ascending_from[t];
    const bool valley_skipping_t = descending_to[t - 1] && value(t - 1) <= value(t + 1) && ascending_from[t + 1];
    if (valley_at_t || valley_skipping_t) {
      return t;
    }
  }
  return std::nullopt;
}

Arrangement canonicalize(std::span<const std::int64_t> x) {
  Arrangement forward(x.begin(), x.end());
  if (is_canonical(forward)) {
    return forward;
  }
  std::reverse(forward.begin(), forward.end());
  return forward;
}

MaximizerResult brute_force_maximize(const ValueMultiset& b, const MaximizerOptions& options) {
  if (b.empty()) {
    throw InvalidMultiset("multiset is empty");
  }
  const std::size_t k = b.size();
  if (k > options.limit) {
    throw SizeError("k = " + std::to_string(k) + " exceeds the brute-force limit " + std::to_string(options.limit));
  }
  const bool prune = options.prune && k >= 5;

  MaximizerResult result;
  result.max_q = -1;
  Arrangement x = b.expand();
  Arrangement reversed(k);
  // Descending start, prev_permutation walks the distinct permutations in
  // lexicographically descending order, so optima arrive sorted.
  do {
    ++result.searched;
    if (!is_canonical(x)) {
      continue;
    }
    if (prune) {
      std::reverse_copy(x.begin(), x.end(), reversed.begin());
      if (!satisfies_necessary_shape(x) && !satisfies_necessary_shape(reversed)) {
        continue;
      }
    }
    ++result.evaluated;
    const auto q = q_unchecked(x);
    if (q > result.max_q) {
      result.max_q = q;
      result.optima.clear();
      result.optima.push_back(x);
    } else if (q == result.max_q) {
      result.optima.push_back(x);
    }
  } while (std::prev_permutation(x.begin(), x.end()));

  result.class_count = result.optima.size();
  result.unique = result.class_count == 1;
  return result;
}

}  // namespace wiener
