#include "qsd/code.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace qsd {

LinearCode::LinearCode(int length) : basis_(length) {}

LinearCode::LinearCode(const BitMatrix& generators) {
  RrefResult r = rref(generators);
  basis_ = std::move(r.matrix);
  pivots_ = std::move(r.pivots);
}

LinearCode::LinearCode(int length, std::vector<BitVector> generators)
    : LinearCode(BitMatrix(length, std::move(generators))) {}

bool LinearCode::contains(const BitVector& v) const {
  if (v.length() != length()) return false;
  BitVector r = v;
  for (int i = 0; i < dimension(); ++i) {
    if (r.get(pivots_[static_cast<std::size_t>(i)])) r ^= basis_.row(i);
  }
  return r.is_zero();
}

LinearCode dual(const LinearCode& c) { return LinearCode(kernel(c.basis())); }

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  const int n = a.length() + b.length();
  BitMatrix m(n);
  for (const auto& r : a.basis().rows()) {
    BitVector v(n);
    for (int c : r.support()) v.set(c);
    m.append(std::move(v));
  }
  for (const auto& r : b.basis().rows()) {
    BitVector v(n);
    for (int c : r.support()) v.set(c + a.length());
    m.append(std::move(v));
  }
  return LinearCode(m);
}

bool is_self_orthogonal(const LinearCode& c) {
  const auto& rows = c.basis().rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (dot(rows[i], rows[j]) != 0) return false;
    }
  }
  return true;
}

bool is_doubly_even(const LinearCode& c) {
  for (const auto& r : c.basis().rows()) {
    if (r.weight() % 4 != 0) return false;
  }
  // wt(a+b) = wt(a) + wt(b) - 2|a∩b|, so pairwise orthogonality keeps
  // every sum ≡ 0 (mod 4).
  return is_self_orthogonal(c);
}

bool is_self_dual(const LinearCode& c) {
  return 2 * c.dimension() == c.length() && is_self_orthogonal(c);
}

int minimum_weight(const LinearCode& c, int budget) {
  if (c.dimension() == 0) {
    throw Error(ErrorKind::UndefinedMinimum, "minimum weight of the zero code is undefined");
  }
  int best = c.length();
  bool first = true;
  enumerate_span(
      c.basis(),
      [&](const BitVector& v) {
        if (first) {
          first = false;
          return;
        }
        best = std::min(best, v.weight());
      },
      budget);
  return best;
}

std::vector<std::uint64_t> weight_enumerator(const LinearCode& c, int budget) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(c.length()) + 1, 0);
  enumerate_span(c.basis(), [&](const BitVector& v) { ++a[static_cast<std::size_t>(v.weight())]; },
                 budget);
  return a;
}

int extremal_bound(int n) {
  if (n <= 0 || n % 8 != 0) {
    throw Error(ErrorKind::NoSelfDualCode,
                "no doubly even self-dual code of length " + std::to_string(n));
  }
  return 4 * (n / 24) + 4;
}

std::vector<BitVector> codewords_of_weight(const LinearCode& c, int w,
                                           std::span<const int> required_support, int budget) {
  const BitVector mask = BitVector::from_support(c.length(), required_support);
  std::vector<BitVector> out;
  enumerate_span(
      c.basis(),
      [&](const BitVector& v) {
        if (v.weight() == w && covers(v, mask)) out.push_back(v);
      },
      budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<BitVector>> codewords_by_weight(const LinearCode& c,
                                                        std::span<const int> weights,
                                                        int budget) {
  std::vector<bool> wanted(static_cast<std::size_t>(c.length()) + 1, false);
  for (int w : weights) {
    if (w >= 0 && w <= c.length()) wanted[static_cast<std::size_t>(w)] = true;
  }
  std::vector<std::vector<BitVector>> out(static_cast<std::size_t>(c.length()) + 1);
  enumerate_span(
      c.basis(),
      [&](const BitVector& v) {
        const auto w = static_cast<std::size_t>(v.weight());
        if (wanted[w]) out[w].push_back(v);
      },
      budget);
  for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
  return out;
}

namespace {

void validate_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorKind::Permutation, "permutation has " + std::to_string(perm.size()) +
                                            " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]) {
      throw Error(ErrorKind::Permutation, "permutation is not a bijection on 1.." +
                                              std::to_string(n));
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

}  // namespace

BitVector apply_permutation(const BitVector& v, std::span<const int> perm) {
  validate_permutation(perm, v.length());
  BitVector out(v.length());
  for (int c : v.support()) out.set(perm[static_cast<std::size_t>(c - 1)]);
  return out;
}

LinearCode apply_permutation(const LinearCode& c, std::span<const int> perm) {
  validate_permutation(perm, c.length());
  BitMatrix m(c.length());
  for (const auto& r : c.basis().rows()) m.append(apply_permutation(r, perm));
  return LinearCode(m);
}

namespace {

[[noreturn]] void parse_error(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

}  // namespace

LinearCode parse_code(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  int k = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> k) || (hs >> extra)) parse_error(lineno, "malformed header, expected \"n k\"");
    break;
  }
  if (n < 0) parse_error(lineno, "missing \"n k\" header");
  if (n <= 0 || k < 0) parse_error(lineno, "header values must satisfy n > 0, k >= 0");
  if (k > n) parse_error(lineno, "dimension " + std::to_string(k) + " exceeds length " +
                                     std::to_string(n));

  BitMatrix rows(n);
  while (rows.nrows() < k && std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    BitVector v;
    try {
      v = BitVector::from_string(line);
    } catch (const Error& e) {
      parse_error(lineno, e.what());
    }
    if (v.length() != n) {
      parse_error(lineno, "row has length " + std::to_string(v.length()) + ", expected " +
                              std::to_string(n));
    }
    rows.append(std::move(v));
  }
  if (rows.nrows() < k) {
    parse_error(lineno, "expected " + std::to_string(k) + " rows, found " +
                            std::to_string(rows.nrows()));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank_or_comment(line)) parse_error(lineno, "unexpected content after last row");
  }
  LinearCode code(rows);
  if (code.dimension() != k) {
    parse_error(lineno, "rows are linearly dependent (rank " + std::to_string(code.dimension()) +
                            ", declared " + std::to_string(k) + ")");
  }
  return code;
}

LinearCode parse_code(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

std::string format_code(const LinearCode& c) {
  std::string out = std::to_string(c.length()) + " " + std::to_string(c.dimension()) + "\n";
  for (const auto& r : c.basis().rows()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace qsd
