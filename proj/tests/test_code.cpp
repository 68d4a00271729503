#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qsd/code.hpp"
#include "qsd/construct.hpp"

using namespace qsd;

namespace {

LinearCode code_of(std::initializer_list<std::string_view> rows) {
  return LinearCode(BitMatrix::from_strings(rows));
}

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected qsd::Error");
  return ErrorKind::InternalConsistency;
}

// Minimum nonzero weight by scanning every vector of F_2^n for membership.
int brute_min_weight(const LinearCode& c) {
  const auto in = oracle::span_table(c.basis());
  int best = c.length() + 1;
  for (std::uint32_t x = 1; x < in.size(); ++x) {
    if (in[x]) best = std::min(best, __builtin_popcount(x));
  }
  return best;
}

}  // namespace

TEST_CASE("dual") {
  SUBCASE("span{110}") {
    const LinearCode d = dual(code_of({"110"}));
    CHECK(d.dimension() == 2);
    CHECK(d.contains(BitVector::from_string("110")));
    CHECK(d.contains(BitVector::from_string("001")));
  }
  SUBCASE("full space") {
    const LinearCode full(BitMatrix::identity(5));
    CHECK(dual(full).dimension() == 0);
    CHECK(dual(full).length() == 5);
  }
  SUBCASE("e8 is its own dual, identical RREF") {
    const LinearCode e8 = seed_code("e8");
    CHECK(dual(e8) == e8);
    CHECK(dual(e8).basis() == e8.basis());
  }
}

TEST_CASE("doubly even / self-orthogonal / self-dual") {
  const LinearCode e8 = seed_code("e8");
  CHECK(is_doubly_even(e8));
  CHECK(is_self_dual(e8));
  // Cross-check against all 16 codewords.
  enumerate_span(e8.basis(), [](const BitVector& v) { CHECK(v.weight() % 4 == 0); });

  const LinearCode rep = code_of({"1100"});
  CHECK_FALSE(is_doubly_even(rep));
  CHECK(is_self_orthogonal(rep));
  CHECK_FALSE(is_self_dual(rep));

  CHECK_FALSE(is_doubly_even(code_of({"111000", "000111"})));
}

TEST_CASE("minimum weight") {
  CHECK(minimum_weight(seed_code("e8")) == 4);
  CHECK(minimum_weight(code_of({"11"})) == 2);
  CHECK(kind_of([] { minimum_weight(LinearCode(6)); }) == ErrorKind::UndefinedMinimum);
  CHECK(kind_of([] { minimum_weight(seed_code("e8_2"), 7); }) == ErrorKind::EnumerationBudget);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 8);
    const LinearCode c(oracle::random_matrix(rng, k, 16));
    if (c.dimension() == 0) continue;
    CHECK(minimum_weight(c) == brute_min_weight(c));
  }
}

TEST_CASE("weight enumerator") {
  const auto a = weight_enumerator(seed_code("e8"));
  CHECK(a == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
  const auto z = weight_enumerator(LinearCode(5));
  CHECK(z == std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("extremal bound") {
  CHECK(extremal_bound(8) == 4);
  CHECK(extremal_bound(16) == 4);
  CHECK(extremal_bound(24) == 8);
  CHECK(extremal_bound(32) == 8);
  CHECK(extremal_bound(40) == 8);
  CHECK(kind_of([] { extremal_bound(12); }) == ErrorKind::NoSelfDualCode);
  CHECK(kind_of([] { extremal_bound(0); }) == ErrorKind::NoSelfDualCode);
}

TEST_CASE("codewords of a given weight") {
  const LinearCode e8 = seed_code("e8");
  const auto heavy = codewords_of_weight(e8, 8);
  REQUIRE(heavy.size() == 1);
  CHECK(heavy.front() == BitVector::ones(8));

  const int one[] = {1};
  const auto through1 = codewords_of_weight(e8, 4, one);
  CHECK(through1.size() == 7);
  CHECK(std::is_sorted(through1.begin(), through1.end()));
  // Oracle: every length-8 vector of weight 4 with coordinate 1 set that lies in e8.
  const auto in = oracle::span_table(e8.basis());
  int expected = 0;
  for (std::uint32_t x = 0; x < 256; ++x) {
    if (in[x] && __builtin_popcount(x) == 4 && (x & 1U)) ++expected;
  }
  CHECK(expected == 7);

  const auto zero = codewords_of_weight(e8, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.front().is_zero());
}

TEST_CASE("permutations") {
  const LinearCode e8 = seed_code("e8");
  std::vector<int> id(8);
  std::iota(id.begin(), id.end(), 1);
  CHECK(apply_permutation(e8, id) == e8);

  std::vector<int> pi = {3, 7, 1, 8, 2, 6, 5, 4};
  const LinearCode moved = apply_permutation(e8, pi);
  CHECK(weight_enumerator(moved)[4] == 14);

  std::vector<int> swap12 = {2, 1, 3, 4, 5, 6, 7, 8};
  CHECK(apply_permutation(apply_permutation(e8, swap12), swap12) == e8);

  std::vector<int> bad = {1, 1, 3, 4, 5, 6, 7, 8};
  CHECK(kind_of([&] { apply_permutation(e8, bad); }) == ErrorKind::Permutation);
  std::vector<int> short_pi = {1, 2, 3};
  CHECK(kind_of([&] { apply_permutation(e8, short_pi); }) == ErrorKind::Permutation);
}

TEST_CASE("code properties on random codes") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const LinearCode c(oracle::random_matrix(rng, static_cast<int>(rng() % (n + 1)), n));
    const LinearCode d = dual(c);
    CHECK(c.dimension() + d.dimension() == n);
    CHECK(dual(d) == c);
    if (is_doubly_even(c)) CHECK(is_self_orthogonal(c));
  }
  // Doubly even codes are rare among random ones; take subcodes of e8_2.
  const LinearCode e82 = seed_code("e8_2");
  for (int trial = 0; trial < 40; ++trial) {
    BitMatrix sub(16);
    for (const auto& r : e82.basis().rows()) {
      if (rng() & 1U) sub.append(r);
    }
    const LinearCode c(sub);
    CHECK(is_doubly_even(c));
    CHECK(is_self_orthogonal(c));
  }
}

TEST_CASE("doubly even self-dual codes contain 1 and have palindromic enumerators") {
  for (const char* name : {"e8", "e8_2", "e8_3"}) {
    const LinearCode c = seed_code(name);
    REQUIRE(is_doubly_even(c));
    REQUIRE(is_self_dual(c));
    CHECK(c.contains(BitVector::ones(c.length())));
    const auto a = weight_enumerator(c);
    for (std::size_t w = 0; w < a.size(); ++w) CHECK(a[w] == a[a.size() - 1 - w]);
  }
}

TEST_CASE("text format") {
  const LinearCode e8 = seed_code("e8");
  CHECK(parse_code(format_code(e8)) == e8);

  const LinearCode spaced = parse_code("# comment\n\n8 4\n1111 0000\n0011 1100\n00001111\n01010101\n");
  CHECK(spaced == e8);

  auto parse_kind = [](const std::string& text) {
    try {
      parse_code(text);
    } catch (const Error& e) {
      return std::make_pair(e.kind(), std::string(e.what()));
    }
    return std::make_pair(ErrorKind::InternalConsistency, std::string());
  };
  auto [k1, m1] = parse_kind("4 2\n1100\n011\n");
  CHECK(k1 == ErrorKind::Parse);
  CHECK(m1.find("line 3") != std::string::npos);
  CHECK(parse_kind("3 4\n111\n").first == ErrorKind::Parse);
  CHECK(parse_kind("4 1\n1201\n").first == ErrorKind::Parse);
  CHECK(parse_kind("four one\n").first == ErrorKind::Parse);
  CHECK(parse_kind("4 2\n1100\n1100\n").first == ErrorKind::Parse);
  CHECK(parse_kind("4 1\n1100\n0011\n").first == ErrorKind::Parse);
}
