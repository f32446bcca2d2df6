#pragma once

#include "permac/types.hpp"

namespace permac {

inline constexpr int kRyserMaxN = 30;
inline constexpr int kNaiveMaxN = 9;
inline constexpr int kHafnianMaxDim = 20;
inline constexpr double kTensorMaxTerms = 1e7;  // (n!)^(nu-1) guard

/// Permanent by Ryser inclusion-exclusion over column subsets with Gray-code
/// updates of the running row sums; O(n 2^n). Guarded at n <= 30.
Complex permanent_ryser(const SquareMatrix& a);

/// Permanent by literal summation over all n! permutations. Guarded at n <= 9.
Complex permanent_naive(const SquareMatrix& a);

/// Hafnian by recursive first-row expansion with subset memoization.
/// Guarded at 2n <= 20. Diagonal entries are never consumed.
Complex hafnian_exact(const EvenSymmetricMatrix& s);

/// Non-memoized depth-first hafnian; the reference the memoized version is
/// cross-checked against.
Complex hafnian_exact_plain(const EvenSymmetricMatrix& s);

/// Multidimensional permanent PER by literal summation over all
/// (nu-1)-tuples of permutations. Guarded at (n!)^(nu-1) <= 1e7.
Complex multidim_permanent_exact(const CubicalTensor& t);

}  // namespace permac
