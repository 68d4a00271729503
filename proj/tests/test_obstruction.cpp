#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qsd/construct.hpp"
#include "qsd/obstruction.hpp"

using namespace qsd;

namespace {

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

// Weight-8 supports by a plain binary-counter walk over all 2^k
// combinations with 64-bit masks (length <= 64).
std::vector<std::uint64_t> weight8_masks(const LinearCode& c) {
  std::vector<std::uint64_t> rows;
  for (const auto& r : c.basis().rows()) {
    std::uint64_t m = 0;
    for (int p : r.support()) m |= std::uint64_t{1} << (p - 1);
    rows.push_back(m);
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  for (std::uint64_t s = 1; s < total; ++s) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((s >> i) & 1U) v ^= rows[i];
    }
    if (__builtin_popcountll(v) == 8) out.push_back(v);
  }
  return out;
}

std::set<Triple> oracle_admissible(int n, const std::vector<std::uint64_t>& words) {
  std::set<Triple> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        const std::uint64_t t = (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1)) |
                                (std::uint64_t{1} << (k - 1));
        const bool covered =
            std::any_of(words.begin(), words.end(), [&](std::uint64_t w) { return (w & t) == t; });
        if (!covered) out.insert({i, j, k});
      }
    }
  }
  return out;
}

const LinearCode& sampled_code() {
  static const LinearCode c = [] {
    WalkConfig cfg;
    cfg.seed = 2;
    cfg.steps = 100;
    return sample_extremal_40(cfg).front();
  }();
  return c;
}

// Minimum weight of C3^⊥ away from the three border pairs, by scanning
// every vector of F_2^n.
std::optional<int> oracle_c3(const IncidenceStructure& d) {
  const LinearCode c3 = bordered_code(d, 3);
  const int v = d.num_points();
  const std::uint32_t border = 7U << v;
  std::optional<int> best;
  for (std::uint32_t x : oracle::orthogonal_masks(c3.basis())) {
    if (x == 0) continue;
    if (__builtin_popcount(x) == 2 && (x & border) == x) continue;
    const int w = __builtin_popcount(x);
    if (!best || w < *best) best = w;
  }
  return best;
}

}  // namespace

TEST_CASE("ratios") {
  CHECK(Ratio{10, 3}.to_string() == "10/3");
  CHECK(Ratio{8, 2}.to_string() == "4");
  CHECK(at_least(4, {4, 1}));
  CHECK_FALSE(at_least(3, {10, 3}));
  CHECK(at_least(4, {10, 3}));
  CHECK(Ratio{10, 4}.value() == doctest::Approx(2.5));
}

TEST_CASE("dual minimum weight bounds for the Fano plane") {
  const IncidenceStructure f = fano_plane();
  const DesignParams p = params_from(7, 3, 1);
  const DualBoundReport rep = check_dual_min_weight_bounds(f, p);
  CHECK(rep.c1_bound.to_string() == "4");
  CHECK(rep.c2_bound.to_string() == "10/3");
  REQUIRE(rep.c1_dual_min_weight.has_value());
  CHECK(*rep.c1_dual_min_weight == 4);  // simplex [7,3,4]
  REQUIRE(rep.c2_dual_min_weight.has_value());
  CHECK(*rep.c2_dual_min_weight == 4);  // e8 is self-dual
  CHECK(rep.holds());

  // Brute-force cross-check of both dual minimum weights.
  for (int border : {0, 1}) {
    int best = 99;
    for (auto x : oracle::orthogonal_masks(bordered_code(f, border).basis())) {
      if (x) best = std::min(best, __builtin_popcount(x));
    }
    CHECK(best == (border == 0 ? *rep.c1_dual_min_weight : *rep.c2_dual_min_weight));
  }
}

TEST_CASE("C3 dual bound against brute force") {
  for (int copies : {1, 2}) {
    const IncidenceStructure d = repeat_blocks(fano_plane(), copies);
    const DesignParams p = params_from(7, 3, copies);
    const C3PerpReport rep = check_C3perp_bound(d, p);
    CHECK(rep.min_weight_outside_excluded == oracle_c3(d));
    CHECK(rep.vectors_checked + 1 ==
          oracle::orthogonal_masks(bordered_code(d, 3).basis()).size());
    // Every row of [A | 111] meets each pair of border columns twice.
    CHECK(rep.excluded_present == std::array<bool, 3>{true, true, true});
    CHECK(rep.holds == at_least(*rep.min_weight_outside_excluded, rep.bound));
  }
}

TEST_CASE("doubly-even conditions on parameters") {
  CHECK(check_lemma_d2_preconditions(37, 9, 1, 3));
  CHECK(check_lemma_d2_preconditions(13, 5, 1, 3));
  CHECK_FALSE(check_lemma_d2_preconditions(7, 3, 1, 3));
  CHECK_FALSE(check_lemma_d2_preconditions(37, 9, 2, 3));
  CHECK_FALSE(check_lemma_d2_preconditions(37, 11, 1, 3));
}

TEST_CASE("admissible triples match an independent scan") {
  const LinearCode& c = sampled_code();
  const auto words = weight8_masks(c);
  CHECK(words.size() == 285);
  const auto expected = oracle_admissible(40, words);
  const TripleFilterResult got = admissible_triples(c);
  CHECK(std::is_sorted(got.admissible.begin(), got.admissible.end()));
  CHECK(std::set<Triple>(got.admissible.begin(), got.admissible.end()) == expected);
  CHECK(got.admissible.size() + static_cast<std::size_t>(got.excluded_count) == 9880);
  CHECK(got.admissible.size() == 1363);
}

TEST_CASE("admissible triples are permutation equivariant") {
  const LinearCode& c = sampled_code();
  const TripleFilterResult base = admissible_triples(c);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> pi(40);
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    const TripleFilterResult moved = admissible_triples(apply_permutation(c, pi));
    std::set<Triple> image;
    for (const auto& t : base.admissible) {
      Triple u{pi[static_cast<std::size_t>(t[0] - 1)], pi[static_cast<std::size_t>(t[1] - 1)],
               pi[static_cast<std::size_t>(t[2] - 1)]};
      std::sort(u.begin(), u.end());
      image.insert(u);
    }
    CHECK(std::set<Triple>(moved.admissible.begin(), moved.admissible.end()) == image);
  }
}

TEST_CASE("the Golay code has no admissible triple") {
  WalkConfig cfg;
  cfg.seed = 3;
  cfg.target_length = 24;
  const LinearCode g = sample_extremal(cfg).front();
  const TripleFilterResult r = admissible_triples(g);
  CHECK(r.admissible.empty());
  CHECK(r.excluded_count == 2024);
}

TEST_CASE("triple filter preconditions") {
  CHECK(kind_of([] { admissible_triples(seed_code("e8_5")); }) == ErrorKind::Precondition);
  CHECK(kind_of([] { admissible_triples(LinearCode(40)); }) == ErrorKind::Precondition);
}

TEST_CASE("pair counting feasibility") {
  CHECK_FALSE(counting_feasible({5, 8, {1, 3}}));  // 80 pairs from 3-sets only: 80 % 3 != 0
  CHECK(counting_feasible({5, 3, {1, 3}}));        // 30 = 10 * 3
  CHECK_FALSE(counting_feasible({2, 1, {1}}));
  CHECK(counting_feasible({2, 1, {2}}));
  CHECK(counting_feasible({0, 5, {}}));
  CHECK(counting_feasible({6, 2, {3, 4}}));  // 30 = 5 * 6
  CHECK_FALSE(counting_feasible({5, 1, {3}}));  // 10 % 3 != 0
  CHECK(kind_of([] { counting_feasible({3, 1, {5}}); }) == ErrorKind::Precondition);

  // Oracle: brute force over n_i up to the target.
  for (int s = 2; s <= 8; ++s) {
    for (int lambda = 1; lambda <= 4; ++lambda) {
      for (int a = 0; a <= s; ++a) {
        for (int b = a + 1; b <= s; ++b) {
          const int target = s * (s - 1) / 2 * lambda;
          const int ca = a * (a - 1) / 2;
          const int cb = b * (b - 1) / 2;
          bool ok = false;
          for (int na = 0; na <= target && !ok; ++na) {
            const int rest = target - na * ca;
            if (rest < 0) break;
            ok = cb == 0 ? rest == 0 : rest % cb == 0;
            if (ca == 0) break;
          }
          CHECK(counting_feasible({s, lambda, {a, b}}) == ok);
        }
      }
    }
  }
}

TEST_CASE("parity split of block rows through the border") {
  const int n = 40;
  BitVector row(n);  // 9 interior points plus the three border coordinates
  for (int p = 1; p <= 9; ++p) row.set(p);
  for (int p = 38; p <= 40; ++p) row.set(p);
  BitVector x(n);  // 5 interior points meeting the block once
  x.set(9);
  for (int p = 10; p <= 13; ++p) x.set(p);
  for (int p = 38; p <= 40; ++p) x.set(p);

  BitMatrix gens(n);
  gens.append(row);
  gens.append(x);
  const LinearCode c = embed_doubly_even_self_dual(LinearCode(gens));
  REQUIRE(c.contains(row));
  REQUIRE(c.contains(x));

  BitMatrix rows(n);
  rows.append(row);
  const ParityReport rep = parity_constraint_check(c, x, rows);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.all_orthogonal);
  CHECK(rep.rows[0].dot == 0);
  CHECK(rep.rows[0].interior_overlap == 1);
  CHECK(rep.rows[0].interior_parity() == 1);
  CHECK(rep.rows[0].border_overlap == 3);

  BitVector outside(n);
  outside.set(1);
  outside.set(2);
  CHECK(kind_of([&] { parity_constraint_check(c, outside, rows); }) == ErrorKind::Membership);
  BitMatrix bad_rows(n);
  bad_rows.append(outside);
  CHECK(kind_of([&] { parity_constraint_check(c, x, bad_rows); }) == ErrorKind::Membership);
}
