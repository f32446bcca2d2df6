#include "permac/combinatorics.hpp"

#include <cmath>

#include "permac/types.hpp"

namespace permac {

double log_factorial(int n) {
  if (n < 0) {
    throw ParameterError("log_factorial: n must be >= 0");
  }
  double acc = 0.0;
  for (int k = 2; k <= n; ++k) {
    acc += std::log(static_cast<double>(k));
  }
  return acc;
}

double factorial_as_double(int n) {
  if (n < 0) {
    throw ParameterError("factorial: n must be >= 0");
  }
  double acc = 1.0;
  for (int k = 2; k <= n; ++k) {
    acc *= static_cast<double>(k);
  }
  return acc;
}

double binomial_as_double(int n, int k) {
  if (k < 0 || k > n) {
    return 0.0;
  }
  if (k > n - k) {
    k = n - k;
  }
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return acc;
}

double perfect_matching_count(int r) {
  if (r < 0) {
    throw ParameterError("perfect_matching_count: r must be >= 0");
  }
  double acc = 1.0;
  for (int j = 2 * r - 1; j > 1; j -= 2) {
    acc *= static_cast<double>(j);
  }
  return acc;
}

std::uint64_t combination_count(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  std::uint64_t acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<std::uint64_t>(n - k + i) /
          static_cast<std::uint64_t>(i);
  }
  return acc;
}

bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int p = k - 1;
  while (p >= 0 && comb[p] == n - k + p) {
    --p;
  }
  if (p < 0) {
    return false;
  }
  ++comb[p];
  for (int q = p + 1; q < k; ++q) {
    comb[q] = comb[q - 1] + 1;
  }
  return true;
}

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k) {
  std::vector<int> comb(static_cast<std::size_t>(k));
  int value = 0;
  for (int pos = 0; pos < k; ++pos) {
    while (true) {
      const std::uint64_t block = combination_count(n - value - 1, k - pos - 1);
      if (rank < block) {
        break;
      }
      rank -= block;
      ++value;
    }
    comb[pos] = value;
    ++value;
  }
  return comb;
}

KTupleEnumerator::KTupleEnumerator(int n, int k) : n_(n), k_(k) {
  if (n_ < 0 || k_ < 0) {
    throw ParameterError("enumerate_k_tuples: n and k must be >= 0");
  }
  if (k_ > n_) {
    done_ = true;  // empty stream
    return;
  }
  tuple_.resize(static_cast<std::size_t>(k_));
  used_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < k_; ++i) {
    tuple_[i] = i;
    used_[i] = 1;
  }
}

const std::vector<int>* KTupleEnumerator::next() {
  if (done_) {
    return nullptr;
  }
  if (!started_) {
    started_ = true;
    return &tuple_;
  }
  if (!advance()) {
    done_ = true;
    return nullptr;
  }
  return &tuple_;
}

bool KTupleEnumerator::advance() {
  // Lexicographic successor over injective tuples: release positions from the
  // right until one can move to a larger unused value, then refill the tail
  // with the smallest unused values in ascending order.
  if (k_ == 0) {
    return false;
  }
  int p = k_ - 1;
  while (p >= 0) {
    used_[tuple_[p]] = 0;
    int candidate = tuple_[p] + 1;
    while (candidate < n_ && used_[candidate]) {
      ++candidate;
    }
    if (candidate < n_) {
      tuple_[p] = candidate;
      used_[candidate] = 1;
      int fill = 0;
      for (int q = p + 1; q < k_; ++q) {
        while (used_[fill]) {
          ++fill;
        }
        tuple_[q] = fill;
        used_[fill] = 1;
      }
      return true;
    }
    --p;
  }
  return false;
}

}  // namespace permac
