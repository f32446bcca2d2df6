#include "permac/exact.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "permac/combinatorics.hpp"

namespace permac {

namespace {

// Shared recursion for both hafnian variants. mask holds the not-yet-matched
// indices; the lowest set index is paired with every other live index.
Complex hafnian_dfs(const EvenSymmetricMatrix& s, std::uint32_t mask) {
  if (mask == 0) {
    return Complex(1.0, 0.0);
  }
  const int i = std::countr_zero(mask);
  const std::uint32_t rest = mask & (mask - 1);
  Complex acc(0.0, 0.0);
  std::uint32_t scan = rest;
  while (scan != 0) {
    const int j = std::countr_zero(scan);
    scan &= scan - 1;
    acc += s.at(i, j) * hafnian_dfs(s, rest & ~(std::uint32_t{1} << j));
  }
  return acc;
}

Complex hafnian_memo(const EvenSymmetricMatrix& s, std::uint32_t mask,
                     std::vector<Complex>& value, std::vector<char>& known) {
  if (mask == 0) {
    return Complex(1.0, 0.0);
  }
  if (known[mask]) {
    return value[mask];
  }
  const int i = std::countr_zero(mask);
  const std::uint32_t rest = mask & (mask - 1);
  Complex acc(0.0, 0.0);
  std::uint32_t scan = rest;
  while (scan != 0) {
    const int j = std::countr_zero(scan);
    scan &= scan - 1;
    acc += s.at(i, j) *
           hafnian_memo(s, rest & ~(std::uint32_t{1} << j), value, known);
  }
  known[mask] = 1;
  value[mask] = acc;
  return acc;
}

Complex per_recursive(std::span<const Complex> entries,
                      std::span<const std::size_t> strides, int nu, int n) {
  // Sum over (nu-1)-tuples of permutations of prod_i a[i, s1(i), ..., s_(nu-1)(i)].
  std::vector<std::vector<int>> sigma(static_cast<std::size_t>(nu) - 1);
  for (auto& s : sigma) {
    s.resize(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 0);
  }
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n));

  Complex total(0.0, 0.0);
  const int axes = nu - 1;
  // Odometer over permutation tuples: axis 0 advances fastest.
  while (true) {
    for (int i = 0; i < n; ++i) {
      std::size_t off = static_cast<std::size_t>(i) * strides[0];
      for (int t = 0; t < axes; ++t) {
        off += static_cast<std::size_t>(sigma[t][i]) * strides[t + 1];
      }
      offsets[i] = off;
    }
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
      prod *= entries[offsets[i]];
    }
    total += prod;

    int axis = 0;
    while (axis < axes &&
           !std::next_permutation(sigma[axis].begin(), sigma[axis].end())) {
      ++axis;  // sigma[axis] rolled over to identity; carry to the next axis
    }
    if (axis == axes) {
      break;
    }
  }
  return total;
}

}  // namespace

Complex permanent_ryser(const SquareMatrix& a) {
  const int n = a.n();
  if (n > kRyserMaxN) {
    throw SizeGuardError("permanent_ryser: n exceeds the n <= 30 guard");
  }
  // per A = (-1)^n sum_{S nonempty} (-1)^{|S|} prod_i sum_{j in S} a_ij,
  // with the column subset walked in Gray-code order so each step updates
  // the row sums by a single column.
  std::vector<Complex> row_sum(static_cast<std::size_t>(n), Complex(0.0, 0.0));
  Complex total(0.0, 0.0);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < limit; ++step) {
    const int j = std::countr_zero(step);
    const std::uint64_t gray = step ^ (step >> 1);
    if (gray & (std::uint64_t{1} << j)) {
      for (int i = 0; i < n; ++i) {
        row_sum[i] += a.at(i, j);
      }
    } else {
      for (int i = 0; i < n; ++i) {
        row_sum[i] -= a.at(i, j);
      }
    }
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
      prod *= row_sum[i];
    }
    if ((n - std::popcount(gray)) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return total;
}

Complex permanent_naive(const SquareMatrix& a) {
  const int n = a.n();
  if (n > kNaiveMaxN) {
    throw SizeGuardError("permanent_naive: n exceeds the n <= 9 guard");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Complex total(0.0, 0.0);
  do {
    Complex prod(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
      prod *= a.at(i, perm[i]);
    }
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Complex hafnian_exact(const EvenSymmetricMatrix& s) {
  const int dim = s.two_n();
  if (dim > kHafnianMaxDim) {
    throw SizeGuardError("hafnian_exact: 2n exceeds the 2n <= 20 guard");
  }
  const std::uint32_t full = (std::uint32_t{1} << dim) - 1;
  std::vector<Complex> value(static_cast<std::size_t>(full) + 1);
  std::vector<char> known(static_cast<std::size_t>(full) + 1, 0);
  return hafnian_memo(s, full, value, known);
}

Complex hafnian_exact_plain(const EvenSymmetricMatrix& s) {
  const int dim = s.two_n();
  if (dim > kHafnianMaxDim) {
    throw SizeGuardError("hafnian_exact_plain: 2n exceeds the 2n <= 20 guard");
  }
  return hafnian_dfs(s, (std::uint32_t{1} << dim) - 1);
}

Complex multidim_permanent_exact(const CubicalTensor& t) {
  const int n = t.n();
  const int nu = t.nu();
  double terms = 1.0;
  const double fact = factorial_as_double(n);
  for (int s = 1; s < nu; ++s) {
    terms *= fact;
  }
  if (terms > kTensorMaxTerms) {
    throw SizeGuardError(
        "multidim_permanent_exact: (n!)^(nu-1) exceeds the 1e7 guard");
  }
  return per_recursive(t.entries(), t.strides(), nu, n);
}

}  // namespace permac
