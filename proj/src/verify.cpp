#include "wiener/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wiener/error.hpp"
#include "wiener/quadform.hpp"

namespace wiener {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json arrangement_json(std::span<const std::int64_t> x) { return Json(std::vector<std::int64_t>(x.begin(), x.end())); }

Json optima_json(const MaximizerResult& r) {
  Json out = Json::array();
  for (const auto& x : r.optima) {
    out.push_back(arrangement_json(x));
  }
  return out;
}

// Shared bookkeeping for sweeps: every record is kept, failures are witnesses.
void add_record(VerificationReport& report, InstanceRecord record) {
  if (!record.passed) {
    report.witnesses.push_back(record);
  }
  report.instances.push_back(std::move(record));
}

Verdict sweep_verdict(const VerificationReport& report) {
  if (report.witnesses.empty()) {
    return Verdict::confirmed;
  }
  const bool strict = std::any_of(report.witnesses.begin(), report.witnesses.end(),
                                  [](const InstanceRecord& w) { return w.strict_gap; });
  return strict ? Verdict::refuted : Verdict::inconclusive;
}

}  // namespace

std::string_view to_string(Subject s) {
  switch (s) {
    case Subject::conjecture1:
      return "conjecture1";
    case Subject::conjecture2:
      return "conjecture2";
    case Subject::theorem31:
      return "theorem31";
    case Subject::theorem13:
      return "theorem13";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed:
      return "confirmed";
    case Verdict::refuted:
      return "refuted";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) {
    throw std::invalid_argument("empty range");
  }
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) {
    return static_cast<std::int64_t>(engine_());
  }
  // Reject the incomplete top block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

ValueMultiset random_dominant_odd_multiset(Rng& rng, std::size_t k_max) {
  if (k_max < 2) {
    throw PreconditionError("k_max must be at least 2 for a dominant-odd multiset");
  }
  const auto k_cap = static_cast<std::int64_t>(k_max);
  while (true) {
    const auto s = rng.uniform(2, 4);
    if (s > k_cap) {
      continue;
    }
    const auto k = rng.uniform(s, k_cap);
    const auto dominant_count = 2 * rng.uniform(0, (k - s) / 2) + 1;

    std::vector<std::int64_t> counts(static_cast<std::size_t>(s - 1), 1);
    for (auto extra = k - dominant_count - (s - 1); extra > 0; --extra) {
      ++counts[static_cast<std::size_t>(rng.uniform(0, s - 2))];
    }

    std::vector<std::int64_t> pool{1, 2, 3, 4, 5, 6};
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i), 5));
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::int64_t> values(pool.begin(), pool.begin() + (s - 1));
    std::sort(values.begin(), values.end(), std::greater<>());

    std::int64_t weighted = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      weighted += values[i] * counts[i];
    }
    std::vector<ValueCount> pairs{{weighted + rng.uniform(1, 5), dominant_count}};
    for (std::size_t i = 0; i < values.size(); ++i) {
      pairs.push_back({values[i], counts[i]});
    }
    ValueMultiset b(std::move(pairs));
    if (has_dominant_odd_value(b)) {
      return b;
    }
  }
}

ValueMultiset random_chemical_multiset(Rng& rng, std::size_t k_max) {
  if (k_max < 1) {
    throw PreconditionError("k_max must be at least 1");
  }
  const auto k = rng.uniform(1, static_cast<std::int64_t>(k_max));
  std::vector<std::int64_t> values;
  for (std::int64_t i = 0; i < k; ++i) {
    values.push_back(rng.uniform(1, 3));
  }
  return ValueMultiset::from_values(values);
}

VerificationReport verify_conjecture1(std::size_t k_max, std::size_t limit) {
  if (k_max < 1) {
    throw DomainError("k_max must be at least 1");
  }
  if (k_max > limit) {
    throw SizeError("k_max = " + std::to_string(k_max) + " exceeds the exact-arithmetic limit " +
                    std::to_string(limit));
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.subject = Subject::conjecture1;
  report.parameters = {{"k_max", k_max}};

  for (std::size_t k = 1; k <= k_max; ++k) {
    const auto closed = charpoly_closed_form(k);
    const auto oracle = charpoly_oracle(k, limit);
    const auto collins = charpoly_from_collins(k);

    InstanceRecord record;
    record.instance = "k=" + std::to_string(k);
    record.passed = closed == oracle;
    record.data = {{"k", k},
                   {"closed_form", closed.to_strings()},
                   {"oracle", oracle.to_strings()},
                   {"collins_agrees", collins == oracle}};
    if (!record.passed) {
      for (std::size_t i = 0; i <= k; ++i) {
        if (closed.coeff(i) != oracle.coeff(i)) {
          record.data["first_mismatch"] = {{"power", i},
                                           {"closed_form", rational_string(closed.coeff(i))},
                                           {"oracle", rational_string(oracle.coeff(i))}};
          break;
        }
      }
      record.strict_gap = true;
    }
    add_record(report, std::move(record));
  }
  report.verdict = report.witnesses.empty() ? Verdict::confirmed : Verdict::refuted;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

ValueMultiset counterexample_family(std::int64_t k, std::int64_t s) {
  if (s < 2) {
    throw PreconditionError("family parameter s must be at least 2, got " + std::to_string(s));
  }
  if (k < 2 * s + 2) {
    throw PreconditionError("family parameter k must be at least 2s+2 = " + std::to_string(2 * s + 2) + ", got " +
                            std::to_string(k));
  }
  std::vector<ValueCount> pairs{{k + s * s, 3}};
  for (std::int64_t v = s - 1; v >= 2; --v) {
    pairs.push_back({v, 2});
  }
  pairs.push_back({1, k - 2 * s + 1});
  ValueMultiset b(std::move(pairs));
  if (static_cast<std::int64_t>(b.size()) != k || !has_dominant_odd_value(b)) {
    throw std::logic_error("counterexample family instance violates its own construction");
  }
  return b;
}

VerificationReport verify_counterexample(const ValueMultiset& b, std::size_t limit) {
  if (!has_dominant_odd_value(b)) {
    // Reuse the constructor's diagnostics.
    dominant_odd_arrangement(b);
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.subject = Subject::conjecture2;
  report.parameters = {{"multiset", b.to_string()}, {"k", b.size()}};

  const auto dominant = dominant_odd_arrangement(b);
  const auto split = symmetric_split_arrangement(b);
  const auto q_dominant = q_value(dominant);
  const auto q_split = q_value(split);
  const auto brute = brute_force_maximize(b, {.prune = false, .limit = limit});
  const bool dominant_is_unique_optimum = brute.unique && brute.optima.front() == canonicalize(dominant);

  InstanceRecord record;
  record.instance = b.to_string();
  record.data = {{"dominant_odd", arrangement_json(dominant)},
                 {"q_dominant_odd", q_dominant},
                 {"symmetric_split", arrangement_json(split)},
                 {"q_symmetric_split", q_split},
                 {"max_q", brute.max_q},
                 {"optima", optima_json(brute)},
                 {"unique", brute.unique},
                 {"gap", brute.max_q - q_split},
                 {"searched", brute.searched}};
  record.strict_gap = q_dominant > q_split;
  record.passed = !(record.strict_gap && dominant_is_unique_optimum);
  report.verdict = record.passed ? Verdict::inconclusive : Verdict::refuted;
  add_record(report, std::move(record));
  report.elapsed_seconds = seconds_since(start);
  return report;
}

InstanceRecord check_theorem31_instance(const ValueMultiset& b) {
  const auto dominant = dominant_odd_arrangement(b);
  const auto expected = canonicalize(dominant);
  const auto brute = brute_force_maximize(b, {.prune = false, .limit = 12});
  const auto q_dominant = q_value(dominant);

  InstanceRecord record;
  record.instance = b.to_string();
  record.passed = brute.unique && brute.optima.front() == expected;
  record.strict_gap = q_dominant < brute.max_q || brute.class_count > 1;
  record.data = {{"dominant_odd", arrangement_json(expected)},
                 {"q_dominant_odd", q_dominant},
                 {"max_q", brute.max_q},
                 {"class_count", brute.class_count},
                 {"optima", optima_json(brute)}};
  return record;
}

InstanceRecord check_chemical_instance(const ValueMultiset& b) {
  const auto split = symmetric_split_arrangement(b);
  const auto best_split = best_symmetric_split(b);
  const auto brute = brute_force_maximize(b, {.prune = false, .limit = 12});
  const auto q_split = q_value(split);

  InstanceRecord record;
  record.instance = b.to_string();
  record.passed = q_split == brute.max_q;
  record.strict_gap = q_split < brute.max_q;
  record.data = {{"symmetric_split", arrangement_json(split)},
                 {"q_symmetric_split", q_split},
                 {"q_best_admissible_split", q_value(best_split)},
                 {"max_q", brute.max_q},
                 {"optima", optima_json(brute)}};
  return record;
}

VerificationReport verify_theorem31_random(std::size_t trials, std::size_t k_max, std::uint64_t seed) {
  if (k_max > 9) {
    throw SizeError("k_max must be at most 9 for the random sweep");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.subject = Subject::theorem31;
  report.parameters = {{"trials", trials}, {"k_max", k_max}, {"seed", seed}};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    auto record = check_theorem31_instance(random_dominant_odd_multiset(rng, k_max));
    record.instance = "#" + std::to_string(i) + " " + record.instance;
    add_record(report, std::move(record));
  }
  report.verdict = sweep_verdict(report);
  report.elapsed_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_chemical_random(std::size_t trials, std::size_t k_max, std::uint64_t seed) {
  if (k_max > 9) {
    throw SizeError("k_max must be at most 9 for the random sweep");
  }
  const auto start = Clock::now();
  VerificationReport report;
  report.subject = Subject::theorem13;
  report.parameters = {{"trials", trials}, {"k_max", k_max}, {"seed", seed}};
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    auto record = check_chemical_instance(random_chemical_multiset(rng, k_max));
    record.instance = "#" + std::to_string(i) + " " + record.instance;
    add_record(report, std::move(record));
  }
  report.verdict = sweep_verdict(report);
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace wiener
