#pragma once

// Bit-packed vectors and matrices over GF(2).
//
// Coordinates are 1-based at the public surface: coordinate i lives in bit
// (i-1) % 64 of word (i-1) / 64. Unused high bits of the last word are kept
// zero so that word-wise popcount/compare is exact.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "qsd/error.hpp"

namespace qsd {

using Word = std::uint64_t;

inline constexpr int kWordBits = 64;

// Largest span dimension enumerate_span will accept unless overridden.
inline constexpr int kDefaultEnumerationBudget = 28;

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int length);

  // "1100" -> coordinates 1 and 2 set. Whitespace is ignored.
  static BitVector from_string(std::string_view bits);
  static BitVector from_support(int length, std::span<const int> support);
  static BitVector ones(int length);

  int length() const noexcept { return length_; }
  int weight() const noexcept;
  bool is_zero() const noexcept;

  bool get(int coord) const;
  void set(int coord, bool value = true);
  void flip(int coord);

  // Sorted 1-based coordinates of the nonzero entries.
  std::vector<int> support() const;
  std::string to_string() const;

  BitVector& operator^=(const BitVector& other);

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  int length_ = 0;
  std::vector<Word> words_;
};

// Numeric order with coordinate 1 as the least significant bit; lengths
// compare first.
bool operator<(const BitVector& a, const BitVector& b);

BitVector add(const BitVector& a, const BitVector& b);
inline BitVector operator+(const BitVector& a, const BitVector& b) { return add(a, b); }

// Standard inner product over GF(2).
int dot(const BitVector& a, const BitVector& b);

// |supp(a) ∩ supp(b)|
int intersection_size(const BitVector& a, const BitVector& b);

// supp(sub) ⊆ supp(super)
bool covers(const BitVector& super, const BitVector& sub);

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int ncols) : ncols_(ncols) {}
  BitMatrix(int ncols, std::vector<BitVector> rows);

  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix identity(int n);

  int ncols() const noexcept { return ncols_; }
  int nrows() const noexcept { return static_cast<int>(rows_.size()); }
  bool empty() const noexcept { return rows_.empty(); }

  const BitVector& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }

  void append(BitVector row);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int ncols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;          // nonzero rows only, sorted by pivot
  int rank = 0;
  std::vector<int> pivots;   // 1-based pivot column of each row
};

RrefResult rref(const BitMatrix& m);

// Basis (in RREF) of {x : dot(x, r) = 0 for every row r of m}.
BitMatrix kernel(const BitMatrix& m);

int rank(const BitMatrix& m);

namespace detail {
[[noreturn]] void throw_budget(int dimension, int budget);
}  // namespace detail

// Visits every element of the row span of `basis` exactly once, in Gray-code
// order (step t flips basis row ctz(t)). The visitor receives the current
// vector; if it returns bool, returning false stops the walk early.
// Basis rows are assumed independent.
template <typename Visitor>
void enumerate_span(const BitMatrix& basis, Visitor&& visit,
                    int budget = kDefaultEnumerationBudget) {
  const int k = basis.nrows();
  if (k > budget) detail::throw_budget(k, budget);

  BitVector current(basis.ncols());
  auto call = [&]() -> bool {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const BitVector&>, bool>) {
      return visit(static_cast<const BitVector&>(current));
    } else {
      visit(static_cast<const BitVector&>(current));
      return true;
    }
  };

  if (!call()) return;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t t = 1; t < total; ++t) {
    current ^= basis.row(std::countr_zero(t));
    if (!call()) return;
  }
}

}  // namespace qsd
