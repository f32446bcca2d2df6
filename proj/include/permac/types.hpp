#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permac {

using Complex = std::complex<double>;

// Error hierarchy; the CLI maps these onto its documented exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParameterError : Error {
  using Error::Error;
};
struct SizeGuardError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct SingularBaseError : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};

struct OutOfRegionError : Error {
  OutOfRegionError(double gamma_in, double delta_in);
  double gamma;
  double delta;
};

/// Dense n x n complex matrix, row-major, immutable after construction.
/// Entries must be finite; NaN/Inf are rejected.
class SquareMatrix {
 public:
  SquareMatrix(int n, std::vector<Complex> entries);

  static SquareMatrix all_ones(int n);

  int n() const { return n_; }
  const Complex& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::span<const Complex> entries() const { return entries_; }

 private:
  int n_;
  std::vector<Complex> entries_;
};

/// Symmetric 2n x 2n complex matrix (hafnian input). The upper triangle of
/// the supplied entries is authoritative; the lower triangle is mirrored so
/// read-back is exactly symmetric.
class EvenSymmetricMatrix {
 public:
  EvenSymmetricMatrix(int two_n, std::vector<Complex> entries);

  static EvenSymmetricMatrix all_ones(int two_n);
  static bool is_exactly_symmetric(int two_n, std::span<const Complex> entries);

  int two_n() const { return two_n_; }
  int pairs() const { return two_n_ / 2; }
  const Complex& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * two_n_ + j];
  }
  std::span<const Complex> entries() const { return entries_; }

 private:
  int two_n_;
  std::vector<Complex> entries_;
};

/// nu-dimensional cubical n x ... x n complex array, entries stored flat in
/// lexicographic index order (first index slowest).
class CubicalTensor {
 public:
  CubicalTensor(int nu, int n, std::vector<Complex> entries);

  static CubicalTensor all_ones(int nu, int n);

  int nu() const { return nu_; }
  int n() const { return n_; }
  std::size_t flat_index(std::span<const int> idx) const;
  const Complex& at(std::span<const int> idx) const {
    return entries_[flat_index(idx)];
  }
  std::span<const Complex> entries() const { return entries_; }
  std::span<const std::size_t> strides() const { return strides_; }

 private:
  int nu_;
  int n_;
  std::vector<std::size_t> strides_;
  std::vector<Complex> entries_;
};

struct PolydiscReport {
  double max_deviation = 0.0;
  bool within = false;
};

double max_deviation_from_one(std::span<const Complex> entries);
double max_deviation_from_one(const SquareMatrix& m);
double max_deviation_from_one(const EvenSymmetricMatrix& m);
double max_deviation_from_one(const CubicalTensor& t);

template <typename Structure>
PolydiscReport polydisc_report(const Structure& s, double radius) {
  const double dev = max_deviation_from_one(s);
  return PolydiscReport{dev, dev <= radius};
}

}  // namespace permac
