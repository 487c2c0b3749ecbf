#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wiener/multiset.hpp"
#include "wiener/spectral.hpp"

namespace wiener {

enum class Subject { conjecture1, conjecture2, theorem31, theorem13 };
enum class Verdict { confirmed, refuted, inconclusive };

std::string_view to_string(Subject s);
std::string_view to_string(Verdict v);

struct InstanceRecord {
  std::string instance;
  nlohmann::ordered_json data;
  bool passed = true;
  // Set when data records a strict numeric inequality against the claim.
  bool strict_gap = false;
};

struct VerificationReport {
  Subject subject = Subject::conjecture1;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::inconclusive;
  // Every checked instance, in instance order.
  std::vector<InstanceRecord> instances;
  // The instances that decide a refutation or a mismatch.
  std::vector<InstanceRecord> witnesses;
  double elapsed_seconds = 0.0;
};

// Closed form vs exact Faddeev-LeVerrier oracle for k = 1..k_max. Mismatches
// become witnesses carrying the first differing coefficient.
VerificationReport verify_conjecture1(std::size_t k_max, std::size_t limit = kDefaultExactLimit);

// {k+s^2 : 3, s-1 : 2, ..., 2 : 2, 1 : k-2s+1}. Requires s >= 2, k >= 2s+2.
ValueMultiset counterexample_family(std::int64_t k, std::int64_t s);

// Dominant-odd vs symmetric-split vs exhaustive maximum on one multiset.
VerificationReport verify_counterexample(const ValueMultiset& b, std::size_t limit = 12);

// Random multisets meeting the dominant-odd hypotheses; each must have the
// dominant-odd arrangement as its unique maximizer.
VerificationReport verify_theorem31_random(std::size_t trials, std::size_t k_max, std::uint64_t seed);

// Random multisets over {1,2,3}; the symmetric split must attain the maximum.
VerificationReport verify_chemical_random(std::size_t trials, std::size_t k_max, std::uint64_t seed);

// Single-instance forms used by the random sweeps.
InstanceRecord check_theorem31_instance(const ValueMultiset& b);
InstanceRecord check_chemical_instance(const ValueMultiset& b);

// Seeded generator with a portable bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// s uniform in [2,4], k in [s, k_max], odd m_s, distinct smaller values in
// [1,6], then a_s raised past the weighted sum of the rest.
ValueMultiset random_dominant_odd_multiset(Rng& rng, std::size_t k_max);

// k uniform in [1, k_max], each entry uniform over {1,2,3}.
ValueMultiset random_chemical_multiset(Rng& rng, std::size_t k_max);

}  // namespace wiener
