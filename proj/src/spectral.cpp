#include "wiener/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wiener/error.hpp"

namespace wiener {

namespace {

mpz_class binomial(unsigned long n, unsigned long r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

mpq_class power_of_two(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

mpq_class fraction(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

int sign_of_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

void require_positive(std::size_t k, const char* what) {
  if (k == 0) {
    throw DomainError(std::string(what) + " must be at least 1");
  }
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("tolerance must be positive");
  }
}

}  // namespace

ExactPolynomial::ExactPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    c.canonicalize();
  }
}

double ExactPolynomial::evaluate(double lambda) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * lambda + coeffs_[i].get_d();
  }
  return acc;
}

double ExactPolynomial::coefficient_scale() const {
  double scale = 0.0;
  for (const auto& c : coeffs_) {
    scale = std::max(scale, std::abs(c.get_d()));
  }
  return scale;
}

std::vector<std::string> ExactPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    out.push_back(rational_string(c));
  }
  return out;
}

ExactPolynomial ExactPolynomial::from_strings(std::span<const std::string> coeffs) {
  std::vector<mpq_class> out;
  out.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpq_class q;
    if (q.set_str(coeffs[i], 10) != 0) {
      throw ParseError("invalid rational '" + coeffs[i] + "'", 1, i + 1);
    }
    if (q.get_den() == 0) {
      throw ParseError("zero denominator in '" + coeffs[i] + "'", 1, i + 1);
    }
    out.push_back(q);
  }
  return ExactPolynomial(std::move(out));
}

std::string rational_string(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

ExactPolynomial charpoly_closed_form(std::size_t k) {
  require_positive(k, "dimension k");
  std::vector<mpq_class> c(k + 1, mpq_class(0));
  c[k] = sign_of_power(k);
  const mpq_class outer = fraction(sign_of_power(k - 1) * static_cast<long>(k), 4);
  for (std::size_t j = 1; j + 1 <= k; ++j) {
    const mpq_class ratio = fraction(static_cast<long>(j), static_cast<long>(j + 1));
    c[k - j - 1] = outer * ratio * mpq_class(binomial(k + j, 2 * j + 1));
  }
  return ExactPolynomial(std::move(c));
}

std::vector<mpz_class> collins_coefficients(std::size_t n) {
  require_positive(n, "path order n");
  std::vector<mpz_class> delta(n + 1, mpz_class(0));
  delta[n] = sign_of_power(n);
  for (std::size_t i = 1; i <= n; ++i) {
    mpq_class v = power_of_two(static_cast<long>(i) - 2) * mpq_class(static_cast<long>(n)) *
                  fraction(static_cast<long>(i - 1), static_cast<long>(i)) *
                  mpq_class(binomial(n + i - 1, 2 * i - 1));
    v *= sign_of_power(n - 1);
    v.canonicalize();
    if (v.get_den() != 1) {
      throw std::logic_error("Collins coefficient delta_" + std::to_string(n - i) + " is not an integer");
    }
    delta[n - i] = v.get_num();
  }
  return delta;
}

std::vector<mpz_class> path_distance_charpoly(std::size_t n, std::size_t limit) {
  require_positive(n, "path order n");
  if (n > limit) {
    throw SizeError("dimension " + std::to_string(n) + " exceeds the exact-arithmetic limit " + std::to_string(limit));
  }

  // Faddeev-LeVerrier for det(mu I - D) = sum_i c_i mu^i:
  //   M_1 = I,  c_{n-m} = -tr(D M_m) / m,  M_{m+1} = D M_m + c_{n-m} I.
  // D is integral and every division is exact.
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  auto dist = [](std::size_t i, std::size_t j) { return static_cast<unsigned long>(i > j ? i - j : j - i); };

  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<mpz_class> m(n * n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    m[at(i, i)] = 1;
  }
  std::vector<mpz_class> dm(n * n);
  for (std::size_t step = 1; step <= n; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class& out = dm[at(i, j)];
        out = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (l != i) {
            mpz_addmul_ui(out.get_mpz_t(), m[at(l, j)].get_mpz_t(), dist(i, l));
          }
        }
      }
    }
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += dm[at(i, i)];
    }
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), step)) {
      throw std::logic_error("Faddeev-LeVerrier trace not divisible by " + std::to_string(step));
    }
    mpz_class coeff;
    mpz_divexact_ui(coeff.get_mpz_t(), trace.get_mpz_t(), step);
    coeff = -coeff;
    c[n - step] = coeff;
    std::swap(m, dm);
    for (std::size_t i = 0; i < n; ++i) {
      m[at(i, i)] += coeff;
    }
  }

  // det(D - mu I) = (-1)^n det(mu I - D).
  if (n % 2 == 1) {
    for (auto& v : c) {
      v = -v;
    }
  }
  return c;
}

ExactPolynomial rescale_distance_charpoly(std::span<const mpz_class> delta) {
  if (delta.size() < 2) {
    throw DomainError("need the coefficients of a polynomial of degree >= 1");
  }
  const auto k = static_cast<long>(delta.size() - 1);
  std::vector<mpq_class> c;
  c.reserve(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) {
    c.push_back(mpq_class(delta[i]) * power_of_two(static_cast<long>(i) - k));
  }
  return ExactPolynomial(std::move(c));
}

ExactPolynomial charpoly_oracle(std::size_t k, std::size_t limit) {
  return rescale_distance_charpoly(path_distance_charpoly(k, limit));
}

ExactPolynomial charpoly_from_collins(std::size_t k) { return rescale_distance_charpoly(collins_coefficients(k)); }

mpq_class charpoly_constant_term(std::size_t k) {
  require_positive(k, "dimension k");
  return fraction(sign_of_power(k - 1) * static_cast<long>(k - 1), 4);
}

TranscendentalRoot solve_theta(std::size_t k, double tol) {
  if (k < 2) {
    throw DomainError("k = " + std::to_string(k) + ": no positive theta exists for k < 2 (lambda_max = 0)");
  }
  require_tolerance(tol);
  const double kd = static_cast<double>(k);
  auto f = [kd](double theta) { return std::tanh(theta / 2.0) * std::tanh(kd * theta / 2.0) - 1.0 / kd; };

  // f increases strictly from -1/k at 0 toward 1 - 1/k.
  double lo = tol;
  while (f(lo) >= 0.0) {
    lo /= 2.0;
  }
  double hi = 4.0;
  while (f(hi) <= 0.0) {
    hi *= 2.0;
  }

  TranscendentalRoot root;
  double mid = lo;
  double fmid = f(lo);
  while (true) {
    mid = lo + (hi - lo) / 2.0;
    fmid = f(mid);
    ++root.iterations;
    // lambda ~ 1/theta^2 for large k, so the bracket must also be narrow.
    if ((std::abs(fmid) <= tol && hi - lo <= tol * mid) || mid <= lo || mid >= hi) {
      break;
    }
    (fmid < 0.0 ? lo : hi) = mid;
  }
  root.theta = mid;
  root.residual = std::abs(fmid);
  // 2 (cosh theta - 1) = 4 sinh^2(theta / 2).
  const double s = std::sinh(mid / 2.0);
  root.lambda = 1.0 / (4.0 * s * s);
  return root;
}

double lambda_max_transcendental(std::size_t k, double tol) { return solve_theta(k, tol).lambda; }

PowerIterationResult power_iteration(std::size_t k, double tol) {
  require_positive(k, "dimension k");
  require_tolerance(tol);
  PowerIterationResult result;
  if (k == 1) {
    result.converged = true;
    return result;
  }

  constexpr std::size_t kMaxIterations = 1'000'000;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<double> v(k, 1.0);
  std::vector<double> w(k);
  std::vector<double> left(k);
  double previous = std::numeric_limits<double>::quiet_NaN();

  for (std::size_t iter = 1; iter <= kMaxIterations; ++iter) {
    // (2 A v)_i = sum_{j<i} (i-j) v_j + sum_{j>i} (j-i) v_j, both built from
    // running sums of a positive vector, so no cancellation.
    double run = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      left[i] = acc;
      run += v[i];
      acc += run;
    }
    run = 0.0;
    acc = 0.0;
    for (std::size_t i = k; i-- > 0;) {
      w[i] = 0.5 * (left[i] + acc);
      run += v[i];
      acc += run;
    }

    double vw = 0.0;
    double vv = 0.0;
    double ww = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      vw += v[i] * w[i];
      vv += v[i] * v[i];
      ww += w[i] * w[i];
    }
    const double estimate = vw / vv;
    const double norm = std::sqrt(ww);
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = w[i] / norm;
    }
    result.iterations = iter;
    result.lambda = estimate;
    // Tolerances below the resolution of the estimate cannot be met.
    if (std::abs(estimate - previous) <= std::max(tol, 4.0 * kEps * std::abs(estimate))) {
      result.converged = true;
      break;
    }
    previous = estimate;
  }
  return result;
}

double lambda_max_power(std::size_t k, double tol) { return power_iteration(k, tol).lambda; }

double solve_a_constant(double tol) {
  require_tolerance(tol);
  auto g = [](double a) { return a * std::tanh(a) - 1.0; };
  double lo = 0.5;
  double hi = 2.0;
  double mid = lo;
  while (true) {
    mid = lo + (hi - lo) / 2.0;
    const double gm = g(mid);
    if (std::abs(gm) <= tol || mid <= lo || mid >= hi) {
      break;
    }
    (gm < 0.0 ? lo : hi) = mid;
  }
  return mid;
}

double lambda_max_asymptotic(std::size_t k) {
  static const double a = solve_a_constant(1e-12);
  const double kd = static_cast<double>(k);
  const double a2 = a * a;
  return kd * kd / (4.0 * a2) - (2.0 + a2) / (12.0 * a2);
}

double lambda_max_rough(std::size_t k) {
  const double kd = static_cast<double>(k);
  return (std::sqrt(3.0) * kd * kd - 2.0) / 10.0;
}

SpectralReport spectral_report(std::size_t k, double tol) {
  require_positive(k, "dimension k");
  SpectralReport r;
  r.k = k;
  r.lambda_power = lambda_max_power(k, tol);
  r.lambda_asymptotic = lambda_max_asymptotic(k);
  r.lambda_rough = lambda_max_rough(k);
  r.a_constant = solve_a_constant(1e-12);
  if (k >= 2) {
    const auto root = solve_theta(k, tol);
    r.theta = root.theta;
    r.lambda_transcendental = root.lambda;
    r.residual_transcendental = std::abs(root.lambda - r.lambda_power);
  }
  r.residual_asymptotic = std::abs(r.lambda_asymptotic - r.lambda_power);
  r.residual_rough = std::abs(r.lambda_rough - r.lambda_power);
  return r;
}

}  // namespace wiener
