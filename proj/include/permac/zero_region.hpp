#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permac/types.hpp"

namespace permac {

/// Zero-free polydisc radius for permanents and hafnians.
inline constexpr double kDeltaPermanent = 0.195;

/// Radii for which the nu-generalized fixed-point equation is known to have
/// a solution: nu = 2, 3, 4. Returns nullopt for nu > 4 (use
/// max_admissible_delta instead).
std::optional<double> published_delta(int nu);

struct RegionConstants {
  int nu = 2;
  double delta = 0.0;
  double theta = 0.0;  // smallest root of the fixed-point equation
  double tau = 0.0;    // sqrt(cos((nu-1) theta + 2 asin delta))
};

struct ThetaSolution {
  RegionConstants constants;
  std::vector<double> other_roots;  // further roots bracketed in the window
};

/// Residual theta (1-delta) sqrt(cos((nu-1) theta + 2 asin delta)) - 2 delta,
/// defined on the admissible window (nu-1) theta + 2 asin delta < pi/2.
double theta_equation_residual(double theta, double delta, int nu);

/// Finds the smallest theta >= 0 solving the fixed-point equation
///   theta = 2 delta / ((1-delta) sqrt(cos((nu-1) theta + 2 asin delta)))
/// inside the admissible window, by bracketing sign changes of the residual
/// on a grid and bisecting. Returns nullopt when no sign change exists.
std::optional<ThetaSolution> solve_theta(double delta, int nu);

/// Largest delta on the grid {resolution, 2 resolution, ...} for which
/// solve_theta succeeds; 0 when none does.
double max_admissible_delta(int nu, double resolution);

struct ProbeReport {
  int n;
  double radius;
  int trials;
  std::uint64_t seed;
  double min_modulus;
  int argmin_trial;
  Complex argmin_value;
  SquareMatrix argmin_matrix;
};

/// splitmix64 output stream: the (index+1)-th value produced from `seed`.
/// Used to derive independent per-trial sub-seeds.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

/// Samples `trials` n x n matrices with entries 1 + r e^{i phi}, r uniform on
/// [0, radius] and phi uniform on [0, 2 pi), computes their exact permanents
/// and reports the minimum modulus with the attaining matrix. Trial t draws
/// from mt19937_64 seeded with splitmix64_at(seed, t), entries in row-major
/// order (r before phi), so reports are reproducible and trials independent.
ProbeReport probe_nonvanishing(int n, double radius, int trials,
                               std::uint64_t seed);

}  // namespace permac
