#pragma once

#include <cstdint>
#include <vector>

namespace permac {

/// ln(n!), computed by direct summation of ln k. Rejects negative n.
double log_factorial(int n);

/// n! as a double (exact up to n = 22, inf past the double range).
double factorial_as_double(int n);

/// Binomial coefficient as a double (0 outside the valid range).
double binomial_as_double(int n, int k);

/// Number of perfect matchings of 2r elements: (2r)!/(r! 2^r) = (2r-1)!!.
double perfect_matching_count(int r);

/// C(n, k) as an exact integer; valid for the small n used here (n <= 62).
std::uint64_t combination_count(int n, int k);

/// Advances an ascending k-subset of {0..n-1} to its lexicographic successor.
/// Start from {0,1,...,k-1}; returns false once the last subset was consumed.
bool next_combination(std::vector<int>& comb, int n);

/// The rank-th ascending k-subset of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(std::uint64_t rank, int n, int k);

/// Streams all ordered k-tuples of distinct indices from {0..n-1} in
/// lexicographic order; n!/(n-k)! tuples in total, an empty stream if k > n.
class KTupleEnumerator {
 public:
  KTupleEnumerator(int n, int k);

  /// Next tuple, or nullptr when exhausted. The pointee is invalidated by
  /// the following call.
  const std::vector<int>* next();

 private:
  bool advance();

  int n_;
  int k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> tuple_;
  std::vector<char> used_;
};

}  // namespace permac
