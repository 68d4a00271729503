#include "qsd/obstruction.hpp"

#include <algorithm>
#include <numeric>

namespace qsd {

std::string Ratio::to_string() const {
  const long long g = std::gcd(num, den);
  const long long n = g ? num / g : num;
  const long long d = g ? den / g : den;
  return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
}

bool at_least(int w, const Ratio& bound) {
  return static_cast<long long>(w) * bound.den >= bound.num;
}

namespace {

std::optional<int> dual_min_weight(const LinearCode& c, int budget) {
  const LinearCode d = dual(c);
  if (d.dimension() == 0) return std::nullopt;
  return minimum_weight(d, budget);
}

}  // namespace

DualBoundReport check_dual_min_weight_bounds(const IncidenceStructure& d,
                                             const DesignParams& params, int budget) {
  DualBoundReport rep;
  rep.c1_bound = {params.r + params.lambda, params.lambda};
  rep.c2_bound = {params.b + params.r, params.r};
  rep.c1_dual_min_weight = dual_min_weight(bordered_code(d, 0), budget);
  rep.c2_dual_min_weight = dual_min_weight(bordered_code(d, 1), budget);
  // An all-zero dual has no nonzero vectors to violate the bound.
  rep.c1_holds = !rep.c1_dual_min_weight || at_least(*rep.c1_dual_min_weight, rep.c1_bound);
  rep.c2_holds = !rep.c2_dual_min_weight || at_least(*rep.c2_dual_min_weight, rep.c2_bound);
  return rep;
}

C3PerpReport check_C3perp_bound(const IncidenceStructure& d, const DesignParams& params,
                                int budget) {
  C3PerpReport rep;
  rep.bound = {params.b + params.r, params.r};
  const int v = d.num_points();
  const int n = v + 3;
  const LinearCode perp = dual(bordered_code(d, 3));

  std::array<BitVector, 3> excluded;
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (std::size_t e = 0; e < 3; ++e) {
    excluded[e] = BitVector(n);
    excluded[e].set(v + pairs[e][0]);
    excluded[e].set(v + pairs[e][1]);
    rep.excluded_present[e] = perp.contains(excluded[e]);
  }

  enumerate_span(
      perp.basis(),
      [&](const BitVector& x) {
        if (x.is_zero()) return;
        ++rep.vectors_checked;
        if (std::find(excluded.begin(), excluded.end(), x) != excluded.end()) return;
        const int w = x.weight();
        if (!rep.min_weight_outside_excluded || w < *rep.min_weight_outside_excluded) {
          rep.min_weight_outside_excluded = w;
        }
      },
      budget);
  rep.holds = !rep.min_weight_outside_excluded ||
              at_least(*rep.min_weight_outside_excluded, rep.bound);
  return rep;
}

bool check_lemma_d2_preconditions(int v, int k, int x, int y) {
  auto mod = [](int a, int m) { return ((a % m) + m) % m; };
  return mod(v, 8) == 5 && mod(k, 4) == 1 && mod(x, 2) == 1 && mod(y, 2) == 1;
}

TripleFilterResult admissible_triples(int length, std::span<const BitVector> weight8) {
  const auto n = static_cast<std::size_t>(length);
  std::vector<bool> excluded(n * n * n, false);
  for (const auto& word : weight8) {
    const auto s = word.support();
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        for (std::size_t c = b + 1; c < s.size(); ++c) {
          const auto i = static_cast<std::size_t>(s[a] - 1);
          const auto j = static_cast<std::size_t>(s[b] - 1);
          const auto k = static_cast<std::size_t>(s[c] - 1);
          excluded[(i * n + j) * n + k] = true;
        }
      }
    }
  }
  TripleFilterResult out;
  for (int i = 1; i <= length; ++i) {
    for (int j = i + 1; j <= length; ++j) {
      for (int k = j + 1; k <= length; ++k) {
        const auto idx = (static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * n +
                         static_cast<std::size_t>(k - 1);
        if (excluded[idx]) {
          ++out.excluded_count;
        } else {
          out.admissible.push_back({i, j, k});
        }
      }
    }
  }
  return out;
}

TripleFilterResult admissible_triples(const LinearCode& c, int budget) {
  std::vector<BitVector> weight8;
  bool too_light = false;
  bool first = true;
  enumerate_span(
      c.basis(),
      [&](const BitVector& x) {
        if (first) {
          first = false;
          return true;
        }
        const int w = x.weight();
        if (w < 8) {
          too_light = true;
          return false;
        }
        if (w == 8) weight8.push_back(x);
        return true;
      },
      budget);
  if (too_light || c.dimension() == 0) {
    throw Error(ErrorKind::Precondition, "triple filter requires minimum weight 8");
  }
  return admissible_triples(c.length(), weight8);
}

bool counting_feasible(const CountingInstance& inst) {
  if (inst.s < 0 || inst.lambda < 0) {
    throw Error(ErrorKind::Precondition, "counting instance needs s, lambda >= 0");
  }
  std::vector<long long> coins;
  for (int i : inst.allowed_sizes) {
    if (i < 0 || i > inst.s) {
      throw Error(ErrorKind::Precondition, "allowed size " + std::to_string(i) + " outside 0..s");
    }
    const long long pairs = static_cast<long long>(i) * (i - 1) / 2;
    if (pairs > 0) coins.push_back(pairs);
  }
  const long long target = static_cast<long long>(inst.s) * (inst.s - 1) / 2 * inst.lambda;
  if (target == 0) return true;
  if (coins.empty()) return false;

  long long g = 0;
  for (long long c : coins) g = std::gcd(g, c);
  if (target % g != 0) return false;

  // Bounded search: every n_i ≤ target, so reachability over 0..target decides it.
  std::vector<bool> reach(static_cast<std::size_t>(target) + 1, false);
  reach[0] = true;
  for (long long t = 1; t <= target; ++t) {
    for (long long c : coins) {
      if (c <= t && reach[static_cast<std::size_t>(t - c)]) {
        reach[static_cast<std::size_t>(t)] = true;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)];
}

ParityReport parity_constraint_check(const LinearCode& c, const BitVector& x,
                                     const BitMatrix& block_rows, int border) {
  if (!c.contains(x)) throw Error(ErrorKind::Membership, "vector is not a codeword");
  const int n = c.length();
  if (border < 0 || border > n) throw Error(ErrorKind::Precondition, "border exceeds length");

  ParityReport rep;
  rep.all_orthogonal = true;
  for (const auto& row : block_rows.rows()) {
    if (!c.contains(row)) throw Error(ErrorKind::Membership, "block row is not a codeword");
    RowParity p;
    p.dot = dot(x, row);
    int border_overlap = 0;
    for (int i = n - border + 1; i <= n; ++i) border_overlap += (x.get(i) && row.get(i)) ? 1 : 0;
    p.border_overlap = border_overlap;
    p.interior_overlap = intersection_size(x, row) - border_overlap;
    rep.all_orthogonal = rep.all_orthogonal && p.dot == 0;
    rep.rows.push_back(p);
  }
  return rep;
}

}  // namespace qsd
