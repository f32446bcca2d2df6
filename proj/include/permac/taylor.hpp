#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "permac/types.hpp"

namespace permac {

// The pipeline approximates f(1) = ln per A (resp. haf, PER) from the Taylor
// expansion of f(z) = ln g(z) at z = 0, where g(z) is the permanent-type
// functional of J + z(X - J). g is a polynomial of degree <= n, so its
// derivatives at 0 vanish past the degree bound while the derivatives of
// f = ln g do not; the engine therefore works with Taylor coefficients
// (scaled derivatives d^k/k!), which stay within double range for the large
// orders the error bound demands when beta is close to 1.

/// Per-structure derivative access for the shared Taylor pipeline.
class DerivativeProvider {
 public:
  virtual ~DerivativeProvider() = default;

  /// f(0): ln n!, ln((2n)!/(n! 2^n)) or (nu-1) ln n!.
  virtual double base_log_value() const = 0;

  /// Degree bound of g (= n for all three structures).
  virtual int degree_bound() const = 0;

  /// d^k g / dz^k at z = 0; exactly 0 for k > degree_bound().
  virtual Complex g_derivative(int k) const = 0;

  /// Derivatives 0..up_to as one batch (default: per-k loop).
  virtual std::vector<Complex> g_derivatives(int up_to) const;
};

class PermanentDerivatives final : public DerivativeProvider {
 public:
  explicit PermanentDerivatives(SquareMatrix a, int threads = 1);

  double base_log_value() const override;
  int degree_bound() const override { return a_.n(); }
  Complex g_derivative(int k) const override;
  std::vector<Complex> g_derivatives(int up_to) const override;

 private:
  SquareMatrix a_;
  int threads_;
};

class HafnianDerivatives final : public DerivativeProvider {
 public:
  explicit HafnianDerivatives(EvenSymmetricMatrix s);

  double base_log_value() const override;
  int degree_bound() const override { return s_.pairs(); }
  Complex g_derivative(int k) const override;
  std::vector<Complex> g_derivatives(int up_to) const override;

 private:
  EvenSymmetricMatrix s_;
};

class TensorDerivatives final : public DerivativeProvider {
 public:
  explicit TensorDerivatives(CubicalTensor t);

  double base_log_value() const override;
  int degree_bound() const override { return t_.n(); }
  Complex g_derivative(int k) const override;
  std::vector<Complex> g_derivatives(int up_to) const override;

 private:
  CubicalTensor t_;
};

/// d^k g(0) of g(z) = per(J + z(A-J)) for k = 0..m, via the grouped
/// combinatorial form (n-k)! k! sum_{|R|=|C|=k} per((A-J)[R,C]) with the
/// submatrix permanents by Ryser. Entries past deg g are exact zeros.
/// With threads > 1 the R-subset loop is split into contiguous rank chunks
/// combined in chunk order, so a given thread count is reproducible.
std::vector<Complex> permanent_g_derivatives(const SquareMatrix& a, int m,
                                             int threads = 1);

/// Reference form of the same derivatives: direct enumeration of ordered
/// k-tuple pairs, (n-k)! sum (a_{i1 j1}-1)...(a_{ik jk}-1). Exponentially
/// more terms; used to cross-check the grouped form.
std::vector<Complex> permanent_g_derivatives_ordered(const SquareMatrix& a,
                                                     int m);

/// d^k g(0) of g(z) = haf(J + z(S-J)):
/// k! M(2n-2k) sum_{|T|=2k} haf((S-J)[T,T]), with M(2r) = (2r)!/(r! 2^r) the
/// perfect-matching count of the untouched elements.
std::vector<Complex> hafnian_g_derivatives(const EvenSymmetricMatrix& s,
                                           int m);

/// d^k g(0) of g(z) = PER(J + z(T-J)):
/// k! ((n-k)!)^(nu-1) sum over one k-subset per axis of PER of the
/// restricted subtensor of T - J.
std::vector<Complex> tensor_g_derivatives(const CubicalTensor& t, int m);

/// Solves the triangular system relating derivatives of g and f = ln g:
///   f^(k)(0) = (g^(k)(0) - sum_{j=1}^{k-1} C(k-1,j) g^(j)(0) f^(k-j)(0)) / g(0).
/// Input g_derivs holds g^(k)(0) for k = 0..m; result holds f^(k)(0) for
/// k = 1..m at index k ([0] is zero). Raw derivative form; overflows double
/// past k ~ 170, use log_series_coefficients for large orders.
std::vector<Complex> f_derivatives_from_g(std::span<const Complex> g_derivs);

/// Coefficient-space form of the same triangular system. Input: coefficients
/// b_k of p(z) = g(z)/g(0) (b_0 must be 1). Output: c_k with
/// ln p(z) = sum_{k>=1} c_k z^k, via k b_k = sum_{l=1}^{k} l c_l b_{k-l}.
std::vector<Complex> log_series_coefficients(std::span<const Complex> b);

/// Inverse of log_series_coefficients: reconstructs b from c. Used for the
/// round-trip consistency check on every derivative table.
std::vector<Complex> exp_series_coefficients(std::span<const Complex> c);

/// Additive truncation bound on f(1): n / ((m+1) beta^m (beta-1)), valid when
/// g has no zeros in |z| <= beta.
double taylor_additive_bound(int n_effective, int m, double beta);

/// Smallest m >= 1 whose additive bound is at most ln(1+epsilon), which makes
/// the relative error of exp(f~(1)) at most epsilon. Scans m upward; beta
/// close enough to 1 that the scan passes 10^6 raises InternalError.
int choose_order(int n_effective, double beta, double epsilon);

inline constexpr int kOrderScanLimit = 1'000'000;

/// Scaled derivatives of g and f at 0 for one approximation run.
struct DerivativeTable {
  int order = 0;                  // m
  std::vector<Complex> g_taylor;  // g^(k)(0)/k!, k = 0..order
  std::vector<Complex> f_taylor;  // f^(k)(0)/k!, k = 1..order ([0] = 0)
};

struct ApproxResult {
  Complex log_estimate;  // estimate of f(1)
  Complex value;         // exp(log_estimate)
  int order_used = 0;
  double beta = std::numeric_limits<double>::infinity();
  double additive_bound = 0.0;  // n_eff / ((m+1) beta^m (beta-1))
  double relative_bound = 0.0;  // exp(additive_bound) - 1
};

struct ApproxComputation {
  ApproxResult result;
  DerivativeTable table;
  double gamma = 0.0;
  double delta = 0.0;
};

/// Runs the full pipeline. gamma is the measured max entry deviation from 1,
/// delta the zero-free radius in force; beta = delta/gamma. gamma == 0 short
/// circuits to the exact base value with m = 0 and zero bounds. gamma >=
/// delta raises OutOfRegionError. order_override fixes m and reports the
/// bound that m achieves instead of consulting epsilon.
ApproxComputation approximate_detailed(
    const DerivativeProvider& provider, int n_effective, double gamma,
    double delta, double epsilon,
    std::optional<int> order_override = std::nullopt);

ApproxResult approximate(const DerivativeProvider& provider, int n_effective,
                         double gamma, double delta, double epsilon);

// Convenience wrappers that measure gamma themselves.
ApproxComputation approximate_permanent(
    const SquareMatrix& a, double epsilon, double delta,
    std::optional<int> order_override = std::nullopt, int threads = 1);
ApproxComputation approximate_hafnian(
    const EvenSymmetricMatrix& s, double epsilon, double delta,
    std::optional<int> order_override = std::nullopt);
ApproxComputation approximate_tensor_permanent(
    const CubicalTensor& t, double epsilon, double delta,
    std::optional<int> order_override = std::nullopt);

}  // namespace permac
