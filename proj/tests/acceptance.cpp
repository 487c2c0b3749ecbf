// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wiener/io.hpp"
#include "wiener/quadform.hpp"
#include "wiener/spectral.hpp"
#include "wiener/trees.hpp"
#include "wiener/verify.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome conjecture1() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::size_t agree = 0;
  for (std::size_t k = 1; k <= 30; ++k) {
    const auto closed = wiener::charpoly_closed_form(k);
    if (closed == wiener::charpoly_oracle(k) && closed == wiener::charpoly_from_collins(k)) {
      ++agree;
    } else {
      out.pass = false;
      out.detail += "mismatch at k=" + std::to_string(k) + "; ";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = out.pass && secs < 10.0;
  out.detail += std::to_string(agree) + "/30 exact agreements, " + fmt("%.3f", secs) + " s (limit 10 s)";
  return out;
}

Outcome constant_term() {
  Outcome out;
  std::size_t ok = 0;
  for (long k = 1; k <= 30; ++k) {
    mpq_class expected((k % 2 == 1 ? 1 : -1) * (k - 1), 4);
    expected.canonicalize();
    const auto k_u = static_cast<std::size_t>(k);
    if (wiener::charpoly_closed_form(k_u).coeff(0) == expected && wiener::charpoly_oracle(k_u).coeff(0) == expected) {
      ++ok;
    } else {
      out.pass = false;
    }
  }
  out.detail = std::to_string(ok) + "/30 constant terms equal (-1)^(k-1)(k-1)/4";
  return out;
}

bool caterpillar_case(const wiener::Arrangement& x) {
  if (x.size() < 2) {
    return true;
  }
  const auto spine = std::accumulate(x.begin(), x.end(), std::int64_t{0}) + 1;
  const auto w = wiener::wiener_index(wiener::caterpillar_from_arrangement(x));
  return static_cast<std::int64_t>(w) == spine * spine + wiener::q_value(x);
}

Outcome caterpillar_identity() {
  Outcome out;
  std::size_t cases = 0;
  std::size_t failures = 0;
  wiener::Arrangement x;
  std::function<void(std::size_t)> grid = [&](std::size_t k) {
    if (x.size() == k) {
      ++cases;
      failures += caterpillar_case(x) ? 0 : 1;
      return;
    }
    for (std::int64_t v = 1; v <= 3; ++v) {
      x.push_back(v);
      grid(k);
      x.pop_back();
    }
  };
  for (std::size_t k = 2; k <= 6; ++k) {
    grid(k);
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    wiener::Arrangement r(2 + rng() % 19);
    for (auto& v : r) {
      v = 1 + static_cast<std::int64_t>(rng() % 5);
    }
    ++cases;
    failures += caterpillar_case(r) ? 0 : 1;
  }
  out.pass = failures == 0;
  out.detail = std::to_string(cases - failures) + "/" + std::to_string(cases) + " exact matches";
  return out;
}

Outcome eigen_cross_check() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  double worst = 0.0;
  for (std::size_t k : {2, 3, 5, 10, 50, 100}) {
    worst = std::max(worst, std::abs(wiener::lambda_max_transcendental(k, 1e-12) - wiener::lambda_max_power(k, 1e-12)));
  }
  const double e2 = std::abs(wiener::lambda_max_transcendental(2, 1e-12) - 0.5);
  const double e3 = std::abs(wiener::lambda_max_transcendental(3, 1e-12) - (1.0 + std::sqrt(3.0)) / 2.0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = worst <= 1e-8 && e2 <= 1e-9 && e3 <= 1e-9 && secs < 5.0;
  out.detail = "max |transcendental - power| " + fmt("%.3g", worst) + " (tol 1e-8), k=2 err " + fmt("%.3g", e2) +
               ", k=3 err " + fmt("%.3g", e3) + " (tol 1e-9), " + fmt("%.3f", secs) + " s (limit 5 s)";
  return out;
}

Outcome asymptotics() {
  Outcome out;
  double previous = INFINITY;
  bool monotone = true;
  double gap = 0.0;
  for (std::size_t k : {10, 20, 40, 80, 160}) {
    gap = std::abs(wiener::lambda_max_power(k, 1e-12) - wiener::lambda_max_asymptotic(k));
    monotone = monotone && gap <= previous;
    previous = gap;
  }
  double worst_rel = 0.0;
  for (std::size_t k = 10; k <= 200; ++k) {
    const double p = wiener::lambda_max_power(k, 1e-12);
    worst_rel = std::max(worst_rel, std::abs(wiener::lambda_max_rough(k) - p) / p);
  }
  out.pass = monotone && gap <= 0.01 && worst_rel <= 0.01;
  out.detail = std::string("gap ") + (monotone ? "nonincreasing" : "NOT monotone") + ", gap(160) " + fmt("%.3g", gap) +
               " (tol 0.01), rough max rel err " + fmt("%.4g", worst_rel) + " (tol 0.01)";
  return out;
}

Outcome a_constant() {
  Outcome out;
  const double a = wiener::solve_a_constant(1e-9);
  out.pass = std::abs(a - 1.199679) <= 1e-5;
  out.detail = "a = " + fmt("%.9f", a) + " (target 1.199679 +- 1e-5)";
  return out;
}

Outcome conjecture2() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  const wiener::ValueMultiset b({{7, 3}, {2, 2}, {1, 2}});
  const auto r = wiener::brute_force_maximize(b);
  const auto q_split = wiener::q_value(wiener::symmetric_split_arrangement(b));
  const bool small = r.searched == 210 && r.max_q == 980 && r.unique &&
                     r.optima.front() == wiener::Arrangement{7, 7, 1, 1, 2, 2, 7} && q_split == 970;
  const auto family = wiener::verify_counterexample(wiener::counterexample_family(9, 3));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.pass = small && family.verdict == wiener::Verdict::refuted && secs < 1.0;
  out.detail = "max " + std::to_string(r.max_q) + " over " + std::to_string(r.searched) + " arrangements vs split " +
               std::to_string(q_split) + ", family(9,3) " + std::string(wiener::to_string(family.verdict)) + ", " +
               fmt("%.3f", secs) + " s (limit 1 s)";
  return out;
}

Outcome sweep(const wiener::VerificationReport& r) {
  Outcome out;
  out.pass = r.verdict == wiener::Verdict::confirmed;
  out.detail = std::to_string(r.instances.size() - r.witnesses.size()) + "/" + std::to_string(r.instances.size()) +
               " instances pass, verdict " + std::string(wiener::to_string(r.verdict));
  const std::size_t shown = std::min<std::size_t>(r.witnesses.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& w = r.witnesses[i];
    out.detail += "\n      witness " + w.instance + ": " + w.data.dump();
  }
  if (r.witnesses.size() > shown) {
    out.detail += "\n      ... " + std::to_string(r.witnesses.size() - shown) + " more";
  }
  return out;
}

Outcome pruning() {
  Outcome out;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::int64_t> current;
  std::function<void(std::size_t, std::int64_t)> grid = [&](std::size_t k, std::int64_t top) {
    if (current.size() == k) {
      const auto b = wiener::ValueMultiset::from_values(current);
      const auto full = wiener::brute_force_maximize(b);
      const auto pruned = wiener::brute_force_maximize(b, {.prune = true});
      ++cases;
      failures += (full.max_q == pruned.max_q && full.optima == pruned.optima) ? 0 : 1;
      return;
    }
    for (std::int64_t v = top; v >= 1; --v) {
      current.push_back(v);
      grid(k, v);
      current.pop_back();
    }
  };
  for (std::size_t k = 1; k <= 9; ++k) {
    grid(k, k <= 7 ? 4 : 3);
  }
  out.pass = failures == 0;
  out.detail = std::to_string(cases - failures) + "/" + std::to_string(cases) + " grid multisets agree";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"closed-form charpoly equals exact oracle and Collins, k=1..30", conjecture1},
      {"constant term identity, k=1..30", constant_term},
      {"caterpillar Wiener identity, grid + 1000 random", caterpillar_identity},
      {"eigenvalue cross-check", eigen_cross_check},
      {"asymptotic and rough approximations", asymptotics},
      {"constant a", a_constant},
      {"symmetric split is not optimal on {7:3,2:2,1:2} and family(9,3)", conjecture2},
      {"dominant-odd unique optimum, 100 random (seed 42)",
       [] { return sweep(wiener::verify_theorem31_random(100, 8, 42)); }},
      {"symmetric split attains max on chemical multisets, 100 random (seed 7)",
       [] { return sweep(wiener::verify_chemical_random(100, 8, 7)); }},
      {"pruned maximizer equals unpruned, grid k<=9", pruning},
  };

  std::size_t failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s [%zu] %s (%.3f s)\n      %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
