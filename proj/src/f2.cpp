#include "qsd/f2.hpp"

#include <algorithm>
#include <cctype>

namespace qsd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::EnumerationBudget: return "enumeration-budget";
    case ErrorKind::UndefinedMinimum: return "undefined-minimum";
    case ErrorKind::NoSelfDualCode: return "no-self-dual-code";
    case ErrorKind::Permutation: return "permutation";
    case ErrorKind::UnknownSeed: return "unknown-seed";
    case ErrorKind::DegenerateNeighbor: return "degenerate-neighbor";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::SamplingExhausted: return "sampling-exhausted";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InfeasibleParameters: return "infeasible-parameters";
    case ErrorKind::DegenerateDesign: return "degenerate-design";
    case ErrorKind::Membership: return "membership";
    case ErrorKind::Stage2Overflow: return "stage2-overflow";
    case ErrorKind::InternalConsistency: return "internal-consistency";
  }
  return "unknown";
}

namespace {

int word_count(int length) { return (length + kWordBits - 1) / kWordBits; }

void require_same_length(const BitVector& a, const BitVector& b) {
  if (a.length() != b.length()) {
    throw Error(ErrorKind::Dimension, "vector lengths differ: " + std::to_string(a.length()) +
                                          " vs " + std::to_string(b.length()));
  }
}

}  // namespace

namespace detail {
void throw_budget(int dimension, int budget) {
  throw Error(ErrorKind::EnumerationBudget,
              "span dimension " + std::to_string(dimension) + " exceeds enumeration budget " +
                  std::to_string(budget));
}
}  // namespace detail

BitVector::BitVector(int length) : length_(length) {
  if (length < 0) throw Error(ErrorKind::Dimension, "negative vector length");
  words_.assign(static_cast<std::size_t>(word_count(length)), 0);
}

BitVector BitVector::from_string(std::string_view bits) {
  std::string clean;
  for (char c : bits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::Parse, std::string("non-binary character '") + c + "'");
    }
    clean.push_back(c);
  }
  BitVector v(static_cast<int>(clean.size()));
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (clean[i] == '1') v.set(static_cast<int>(i) + 1);
  }
  return v;
}

BitVector BitVector::from_support(int length, std::span<const int> support) {
  BitVector v(length);
  for (int c : support) v.set(c);
  return v;
}

BitVector BitVector::ones(int length) {
  BitVector v(length);
  for (int i = 1; i <= length; ++i) v.set(i);
  return v;
}

int BitVector::weight() const noexcept {
  int w = 0;
  for (Word x : words_) w += std::popcount(x);
  return w;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

bool BitVector::get(int coord) const {
  if (coord < 1 || coord > length_) {
    throw Error(ErrorKind::Dimension, "coordinate " + std::to_string(coord) + " out of range");
  }
  const int i = coord - 1;
  return (words_[static_cast<std::size_t>(i / kWordBits)] >> (i % kWordBits)) & 1U;
}

void BitVector::set(int coord, bool value) {
  if (coord < 1 || coord > length_) {
    throw Error(ErrorKind::Dimension, "coordinate " + std::to_string(coord) + " out of range");
  }
  const int i = coord - 1;
  const Word mask = Word{1} << (i % kWordBits);
  Word& w = words_[static_cast<std::size_t>(i / kWordBits)];
  w = value ? (w | mask) : (w & ~mask);
}

void BitVector::flip(int coord) { set(coord, !get(coord)); }

std::vector<int> BitVector::support() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(weight()));
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x != 0) {
      out.push_back(static_cast<int>(w) * kWordBits + std::countr_zero(x) + 1);
      x &= x - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int c : support()) s[static_cast<std::size_t>(c - 1)] = '1';
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool operator<(const BitVector& a, const BitVector& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

BitVector add(const BitVector& a, const BitVector& b) {
  BitVector out = a;
  out ^= b;
  return out;
}

int dot(const BitVector& a, const BitVector& b) { return intersection_size(a, b) & 1; }

int intersection_size(const BitVector& a, const BitVector& b) {
  require_same_length(a, b);
  auto wa = a.words();
  auto wb = b.words();
  int n = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) n += std::popcount(wa[i] & wb[i]);
  return n;
}

bool covers(const BitVector& super, const BitVector& sub) {
  require_same_length(super, sub);
  auto ws = super.words();
  auto wb = sub.words();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if ((wb[i] & ~ws[i]) != 0) return false;
  }
  return true;
}

BitMatrix::BitMatrix(int ncols, std::vector<BitVector> rows) : ncols_(ncols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) append(std::move(r));
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVector> vs;
  for (auto r : rows) vs.push_back(BitVector::from_string(r));
  const int n = vs.empty() ? 0 : vs.front().length();
  return BitMatrix(n, std::move(vs));
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    BitVector r(n);
    r.set(i);
    m.append(std::move(r));
  }
  return m;
}

void BitMatrix::append(BitVector row) {
  if (row.length() != ncols_) {
    throw Error(ErrorKind::Dimension, "row of length " + std::to_string(row.length()) +
                                          " appended to matrix with " + std::to_string(ncols_) +
                                          " columns");
  }
  rows_.push_back(std::move(row));
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  const int n = m.ncols();
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 1; col <= n && next < rows.size(); ++col) {
    std::size_t pick = next;
    while (pick < rows.size() && !rows[pick].get(col)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[next], rows[pick]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  RrefResult out;
  out.rank = static_cast<int>(next);
  out.matrix = BitMatrix(n, std::move(rows));
  out.pivots = std::move(pivots);
  return out;
}

int rank(const BitMatrix& m) { return rref(m).rank; }

BitMatrix kernel(const BitMatrix& m) {
  const int n = m.ncols();
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n) + 1, false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  BitMatrix basis(n);
  for (int free = 1; free <= n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    BitVector v(n);
    v.set(free);
    for (int i = 0; i < r.rank; ++i) {
      if (r.matrix.row(i).get(free)) v.set(r.pivots[static_cast<std::size_t>(i)]);
    }
    basis.append(std::move(v));
  }
  return rref(basis).matrix;
}

}  // namespace qsd
