#pragma once

#include <cstddef>
#include <cstdint>

#include "permac/types.hpp"

// Unguarded flat-array kernels shared by the exact oracles and the
// derivative enumerations (which apply them to many small submatrices).

namespace permac::detail {

/// Ryser inclusion-exclusion permanent of a row-major n x n block.
Complex ryser_flat(const Complex* a, int n);

/// Depth-first hafnian of a row-major symmetric dim x dim block (dim even).
Complex hafnian_flat(const Complex* s, int dim);

/// Multidimensional permanent of a cubical block given its strides.
Complex per_flat(const Complex* t, const std::size_t* strides, int nu, int n);

}  // namespace permac::detail
