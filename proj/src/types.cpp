#include "permac/types.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace permac {

namespace {

std::string format_region_message(double gamma, double delta) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "outside zero-free region, gamma=%.17g, delta=%.17g",
                gamma, delta);
  return buf;
}

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ParameterError("non-finite entry (NaN/Inf) rejected");
    }
  }
}

}  // namespace

OutOfRegionError::OutOfRegionError(double gamma_in, double delta_in)
    : Error(format_region_message(gamma_in, delta_in)),
      gamma(gamma_in),
      delta(delta_in) {}

SquareMatrix::SquareMatrix(int n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) {
    throw ParameterError("matrix dimension must be >= 1");
  }
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw ParameterError("matrix entry count does not equal n^2");
  }
  require_finite(entries_);
}

SquareMatrix SquareMatrix::all_ones(int n) {
  if (n < 1) {
    throw ParameterError("matrix dimension must be >= 1");
  }
  return SquareMatrix(n, std::vector<Complex>(static_cast<std::size_t>(n) * n,
                                              Complex(1.0, 0.0)));
}

EvenSymmetricMatrix::EvenSymmetricMatrix(int two_n, std::vector<Complex> entries)
    : two_n_(two_n), entries_(std::move(entries)) {
  if (two_n_ < 2 || two_n_ % 2 != 0) {
    throw ParameterError("symmetric matrix dimension must be even and >= 2");
  }
  if (entries_.size() != static_cast<std::size_t>(two_n_) * two_n_) {
    throw ParameterError("symmetric matrix entry count does not equal (2n)^2");
  }
  require_finite(entries_);
  // Upper triangle is authoritative.
  for (int i = 0; i < two_n_; ++i) {
    for (int j = 0; j < i; ++j) {
      entries_[static_cast<std::size_t>(i) * two_n_ + j] =
          entries_[static_cast<std::size_t>(j) * two_n_ + i];
    }
  }
}

EvenSymmetricMatrix EvenSymmetricMatrix::all_ones(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw ParameterError("symmetric matrix dimension must be even and >= 2");
  }
  return EvenSymmetricMatrix(
      two_n, std::vector<Complex>(static_cast<std::size_t>(two_n) * two_n,
                                  Complex(1.0, 0.0)));
}

bool EvenSymmetricMatrix::is_exactly_symmetric(int two_n,
                                               std::span<const Complex> entries) {
  if (entries.size() != static_cast<std::size_t>(two_n) * two_n) {
    return false;
  }
  for (int i = 0; i < two_n; ++i) {
    for (int j = i + 1; j < two_n; ++j) {
      if (entries[static_cast<std::size_t>(i) * two_n + j] !=
          entries[static_cast<std::size_t>(j) * two_n + i]) {
        return false;
      }
    }
  }
  return true;
}

CubicalTensor::CubicalTensor(int nu, int n, std::vector<Complex> entries)
    : nu_(nu), n_(n), entries_(std::move(entries)) {
  if (nu_ < 2) {
    throw ParameterError("tensor arity nu must be >= 2");
  }
  if (n_ < 1) {
    throw ParameterError("tensor dimension must be >= 1");
  }
  std::size_t count = 1;
  const std::size_t limit = std::numeric_limits<std::size_t>::max();
  for (int t = 0; t < nu_; ++t) {
    if (count > limit / static_cast<std::size_t>(n_)) {
      throw ParameterError("tensor entry count overflows");
    }
    count *= static_cast<std::size_t>(n_);
  }
  if (entries_.size() != count) {
    throw ParameterError("tensor entry count does not equal n^nu");
  }
  require_finite(entries_);
  strides_.resize(nu_);
  std::size_t stride = 1;
  for (int t = nu_ - 1; t >= 0; --t) {
    strides_[t] = stride;
    stride *= static_cast<std::size_t>(n_);
  }
}

CubicalTensor CubicalTensor::all_ones(int nu, int n) {
  if (nu < 2 || n < 1) {
    throw ParameterError("tensor requires nu >= 2 and n >= 1");
  }
  std::size_t count = 1;
  for (int t = 0; t < nu; ++t) count *= static_cast<std::size_t>(n);
  return CubicalTensor(nu, n, std::vector<Complex>(count, Complex(1.0, 0.0)));
}

std::size_t CubicalTensor::flat_index(std::span<const int> idx) const {
  std::size_t offset = 0;
  for (int t = 0; t < nu_; ++t) {
    offset += static_cast<std::size_t>(idx[t]) * strides_[t];
  }
  return offset;
}

double max_deviation_from_one(std::span<const Complex> entries) {
  double dev = 0.0;
  for (const Complex& z : entries) {
    dev = std::max(dev, std::abs(z - Complex(1.0, 0.0)));
  }
  return dev;
}

double max_deviation_from_one(const SquareMatrix& m) {
  return max_deviation_from_one(m.entries());
}

double max_deviation_from_one(const EvenSymmetricMatrix& m) {
  return max_deviation_from_one(m.entries());
}

double max_deviation_from_one(const CubicalTensor& t) {
  return max_deviation_from_one(t.entries());
}

}  // namespace permac
