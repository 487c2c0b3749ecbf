#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wiener/multiset.hpp"

namespace wiener {

// Spine weights x_1..x_k, every entry >= 1.
using Arrangement = std::vector<std::int64_t>;

// Throws InvalidArrangement if x is empty or has an entry < 1.
void check_arrangement(std::span<const std::int64_t> x);

// q(x) = 1/2 sum_{i,j} |i-j| x_i x_j = sum_{i<j} (j-i) x_i x_j.
// Throws InvalidArrangement on overflow of the 64-bit result.
std::int64_t q_value(std::span<const std::int64_t> x);

// The k x k matrix A_k with entries |i-j|/2, stored as the integer matrix
// D(P_k) = 2 A_k with a global factor 1/2.
class HalfDistanceMatrix {
 public:
  explicit HalfDistanceMatrix(std::size_t k);

  std::size_t dimension() const { return k_; }
  // Entry of 2 A_k, i.e. |i-j|.
  std::int64_t doubled(std::size_t i, std::size_t j) const { return doubled_[i * k_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return 0.5 * static_cast<double>(doubled(i, j)); }

 private:
  std::size_t k_;
  std::vector<std::int64_t> doubled_;
};

HalfDistanceMatrix a_matrix(std::size_t k);

// Largest values split near-evenly to both ends, descending inward, with the
// smallest value as one intact middle block. Odd multiplicities put the extra
// copy on the left (l_i = ceil(m_i / 2)).
Arrangement symmetric_split_arrangement(const ValueMultiset& b);

// Maximum-q arrangement among all splits with |l_i - r_i| <= 1. Ties keep the
// first split in left-heavy-first order, so the result equals
// symmetric_split_arrangement when at most one multiplicity is odd.
Arrangement best_symmetric_split(const ValueMultiset& b);

// h+1 copies of the dominant value a_s, then the remaining values ascending,
// then h copies of a_s, where m_s = 2h+1. Requires s >= 2, m_s odd and
// a_s > sum_{i<s} m_i a_i; throws PreconditionError naming the failed one.
Arrangement dominant_odd_arrangement(const ValueMultiset& b);

// True iff b meets the hypotheses of dominant_odd_arrangement.
bool has_dominant_odd_value(const ValueMultiset& b);

// Smallest t in [2, k-2] (1-based) with
//   sum_{i<=t-2} x_i <= sum_{i>=t+1} x_i  and  sum_{i<=t-1} x_i > sum_{i>=t+2} x_i,
// and x descending to a valley at t (or at t-1, skipping x_t) then ascending.
// Empty for k < 4 or when no t qualifies.
std::optional<std::size_t> satisfies_necessary_shape(std::span<const std::int64_t> x);

// Lexicographically greater of x and reverse(x).
Arrangement canonicalize(std::span<const std::int64_t> x);

struct MaximizerOptions {
  bool prune = false;
  std::size_t limit = 12;
};

struct MaximizerResult {
  std::int64_t max_q = 0;
  // Canonical optima, lexicographically descending.
  std::vector<Arrangement> optima;
  std::size_t class_count = 0;
  bool unique = false;
  // Distinct arrangements enumerated.
  std::uint64_t searched = 0;
  // Reversal classes whose q was computed (after pruning).
  std::uint64_t evaluated = 0;
};

// Exhaustive maximum of q over the distinct permutations of b, reported per
// reversal class. With prune set and k >= 5, reversal classes failing
// satisfies_necessary_shape in both orientations are skipped.
MaximizerResult brute_force_maximize(const ValueMultiset& b, const MaximizerOptions& options = {});

}  // namespace wiener
