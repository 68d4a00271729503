#pragma once

// Enumeration-backed checks of the code-theoretic constraints a
// quasi-symmetric design places on its bordered codes, plus the weight-8
// triple filter and the pair-counting feasibility test.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qsd/code.hpp"
#include "qsd/design.hpp"

namespace qsd {

// Exact non-negative fraction num/den.
struct Ratio {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
};

// integer w satisfies w >= bound
bool at_least(int w, const Ratio& bound);

struct DualBoundReport {
  Ratio c1_bound;                        // (r+λ)/λ
  std::optional<int> c1_dual_min_weight; // empty when C1^⊥ = {0}
  bool c1_holds = false;
  Ratio c2_bound;                        // (b+r)/r
  std::optional<int> c2_dual_min_weight;
  bool c2_holds = false;

  bool holds() const { return c1_holds && c2_holds; }
};

DualBoundReport check_dual_min_weight_bounds(const IncidenceStructure& d,
                                             const DesignParams& params,
                                             int budget = kDefaultEnumerationBudget);

struct C3PerpReport {
  Ratio bound;  // (b+r)/r
  // Which of the three weight-2 border vectors (…,1,1,0), (…,1,0,1),
  // (…,0,1,1) lie in C3^⊥.
  std::array<bool, 3> excluded_present{};
  std::optional<int> min_weight_outside_excluded;
  std::uint64_t vectors_checked = 0;
  bool holds = false;
};

C3PerpReport check_C3perp_bound(const IncidenceStructure& d, const DesignParams& params,
                                int budget = kDefaultEnumerationBudget);

// v ≡ 5 (mod 8), k ≡ 1 (mod 4), x and y odd.
bool check_lemma_d2_preconditions(int v, int k, int x, int y);

using Triple = std::array<int, 3>;

struct TripleFilterResult {
  std::vector<Triple> admissible;  // lexicographic
  long long excluded_count = 0;
};

// Triples of coordinates contained in the support of no weight-8 codeword.
// Throws Precondition when the code has minimum weight below 8.
TripleFilterResult admissible_triples(const LinearCode& c,
                                      int budget = kDefaultEnumerationBudget);

// Same filter from an already enumerated list of weight-8 codewords.
TripleFilterResult admissible_triples(int length, std::span<const BitVector> weight8);

struct CountingInstance {
  int s = 0;
  int lambda = 0;
  std::set<int> allowed_sizes;
};

// Whether non-negative integers n_i (i ∈ allowed_sizes) satisfy
// Σ C(i,2)·n_i = C(s,2)·λ.
bool counting_feasible(const CountingInstance& inst);

struct RowParity {
  int dot = 0;              // x · row
  int interior_overlap = 0; // |S ∩ B| away from the border
  int border_overlap = 0;
  int interior_parity() const { return interior_overlap & 1; }
};

struct ParityReport {
  std::vector<RowParity> rows;
  bool all_orthogonal = false;
};

// For x ∈ C and block rows in C, records x·row and the overlap split
// between the first n-border coordinates and the last `border` ones.
ParityReport parity_constraint_check(const LinearCode& c, const BitVector& x,
                                     const BitMatrix& block_rows, int border = 3);

}  // namespace qsd
