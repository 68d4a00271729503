#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qsd/f2.hpp"

namespace qsd {

// Binary linear [n, k] code, stored as its RREF generator matrix so that
// equal codes compare equal.
class LinearCode {
 public:
  LinearCode() = default;
  explicit LinearCode(int length);  // zero code
  explicit LinearCode(const BitMatrix& generators);
  LinearCode(int length, std::vector<BitVector> generators);

  int length() const noexcept { return basis_.ncols(); }
  int dimension() const noexcept { return basis_.nrows(); }
  const BitMatrix& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  bool contains(const BitVector& v) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.basis_ == b.basis_;
  }

 private:
  BitMatrix basis_;
  std::vector<int> pivots_;
};

LinearCode dual(const LinearCode& c);

// Direct sum C1 ⊕ C2 of length n1 + n2.
LinearCode direct_sum(const LinearCode& a, const LinearCode& b);

// Basis rows all have weight ≡ 0 (mod 4) and are pairwise orthogonal.
bool is_doubly_even(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

// Exhaustive; throws UndefinedMinimum for the zero code.
int minimum_weight(const LinearCode& c, int budget = kDefaultEnumerationBudget);

// A[w] for w = 0..n.
std::vector<std::uint64_t> weight_enumerator(const LinearCode& c,
                                             int budget = kDefaultEnumerationBudget);

// 4·⌊n/24⌋ + 4; throws NoSelfDualCode unless n ≡ 0 (mod 8), n > 0.
int extremal_bound(int n);

// Codewords of weight w whose support contains every coordinate of
// required_support, sorted ascending.
std::vector<BitVector> codewords_of_weight(const LinearCode& c, int w,
                                           std::span<const int> required_support = {},
                                           int budget = kDefaultEnumerationBudget);

// All codewords bucketed by weight in a single pass: out[w] is sorted and
// holds the codewords of weight w for every w in `weights` (other buckets empty).
std::vector<std::vector<BitVector>> codewords_by_weight(const LinearCode& c,
                                                        std::span<const int> weights,
                                                        int budget = kDefaultEnumerationBudget);

// perm[i-1] is the image of coordinate i (1-based).
BitVector apply_permutation(const BitVector& v, std::span<const int> perm);
LinearCode apply_permutation(const LinearCode& c, std::span<const int> perm);

// Text format: "n k" header, then k rows of n characters from {0,1}.
// Whitespace inside rows is ignored; '#' starts a comment line.
LinearCode parse_code(std::istream& in);
LinearCode parse_code(const std::string& text);
std::string format_code(const LinearCode& c);

}  // namespace qsd
