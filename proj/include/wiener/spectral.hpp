#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wiener {

// Polynomial in lambda with exact rational coefficients; coeff(i) multiplies
// lambda^i.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<mpq_class> coeffs);

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const mpq_class& coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  double evaluate(double lambda) const;
  // Largest |coefficient| as a double.
  double coefficient_scale() const;

  // "p/q" for every coefficient from lambda^0 upward.
  std::vector<std::string> to_strings() const;
  static ExactPolynomial from_strings(std::span<const std::string> coeffs);

  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpq_class> coeffs_;
};

// Renders q as "num/den", denominator always present.
std::string rational_string(const mpq_class& q);

inline constexpr std::size_t kDefaultExactLimit = 64;

// det(A_k - lambda I) from the closed form
//   (-1)^k lambda^k (1 - k/4 sum_{j=1}^{k-1} j/(j+1) C(k+j, 2j+1) lambda^{-j-1}).
ExactPolynomial charpoly_closed_form(std::size_t k);

// delta_0..delta_n of det(D(P_n) - lambda I) from Collins' formula
//   delta_n = (-1)^n,
//   delta_{n-i} = (-1)^{n-1} 2^{i-2} n (i-1)/i C(n+i-1, 2i-1).
std::vector<mpz_class> collins_coefficients(std::size_t n);

// det(D(P_n) - lambda I) by Faddeev-LeVerrier over the integers.
std::vector<mpz_class> path_distance_charpoly(std::size_t n, std::size_t limit = kDefaultExactLimit);

// Coefficients of det(A_k - lambda I) = 2^{-k} sum_i delta_i (2 lambda)^i
// given those of det(D(P_k) - mu I).
ExactPolynomial rescale_distance_charpoly(std::span<const mpz_class> delta);

// Independent route: Faddeev-LeVerrier on D(P_k), then rescaled.
ExactPolynomial charpoly_oracle(std::size_t k, std::size_t limit = kDefaultExactLimit);

// Collins' coefficients for n = k, rescaled.
ExactPolynomial charpoly_from_collins(std::size_t k);

// (-1)^{k-1} (k-1)/4, the constant term of det(A_k - lambda I).
mpq_class charpoly_constant_term(std::size_t k);

struct TranscendentalRoot {
  double theta = 0.0;
  double lambda = 0.0;
  // |tanh(theta/2) tanh(k theta/2) - 1/k| at theta.
  double residual = 0.0;
  std::size_t iterations = 0;
};

// Positive root theta of tanh(theta/2) tanh(k theta/2) = 1/k by bisection and
// lambda_max = 1 / (2 (cosh theta - 1)). Requires k >= 2 and tol > 0.
TranscendentalRoot solve_theta(std::size_t k, double tol);
double lambda_max_transcendental(std::size_t k, double tol);

struct PowerIterationResult {
  double lambda = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Power iteration on A_k from the all-ones vector with Rayleigh-quotient
// estimates; stops when successive estimates differ by at most tol.
PowerIterationResult power_iteration(std::size_t k, double tol);
double lambda_max_power(std::size_t k, double tol);

// k^2/(4a^2) - (2+a^2)/(12a^2) with a tanh a = 1.
double lambda_max_asymptotic(std::size_t k);

// (sqrt(3) k^2 - 2) / 10.
double lambda_max_rough(std::size_t k);

// Positive root of a tanh(a) = 1 by bisection on [0.5, 2].
double solve_a_constant(double tol);

struct SpectralReport {
  std::size_t k = 0;
  // Empty for k = 1, which has no positive theta.
  std::optional<double> theta;
  std::optional<double> lambda_transcendental;
  double lambda_power = 0.0;
  double lambda_asymptotic = 0.0;
  double lambda_rough = 0.0;
  double a_constant = 0.0;
  // |method - power| for each other method.
  std::optional<double> residual_transcendental;
  double residual_asymptotic = 0.0;
  double residual_rough = 0.0;
};

SpectralReport spectral_report(std::size_t k, double tol);

}  // namespace wiener
