#pragma once

// Two-stage search for a quasi-symmetric design inside a doubly even
// self-dual code.
//
// For a code C and an admissible triple T, the candidate blocks X are the
// supports (minus T) of the weight-12 codewords containing T. Stage 1 asks,
// for every pair {i, j} outside T, whether the graph Γ_ij of candidate
// blocks through {i, j} (adjacent when they meet in 3 points) has a clique
// of size λ = 8; any pair without one excludes (C, T). Stage 2 fixes a base
// pair (i0, j0) with the fewest 8-cliques and, for each 8-clique K there,
// repeats the stage-1 test on graphs restricted to blocks meeting every
// member of K in 1 or 3 points. A K that passes every pair is reported as a
// survivor for manual follow-up.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsd/clique.hpp"
#include "qsd/code.hpp"
#include "qsd/design.hpp"

namespace qsd {

struct SearchParams {
  int block_weight = 12;       // codeword weight that yields candidate blocks
  int lambda = 8;              // blocks through each point pair
  int adjacency_intersection = 3;
  std::vector<int> compatible_intersections = {1, 3};
  std::uint64_t clique_cap = 1'000'000;
  int budget = kDefaultEnumerationBudget;
};

struct CandidateSet {
  std::string code_id;
  int length = 0;           // points are 1..length
  std::vector<int> T;       // sorted, removed from every block
  std::vector<BitVector> blocks;  // sorted ascending

  bool in_T(int p) const;
};

CandidateSet candidate_blocks(const LinearCode& c, std::span<const int> T,
                              const SearchParams& params = {}, std::string code_id = {});

// Same, from pre-enumerated codewords of the block weight.
CandidateSet candidate_blocks(int length, std::span<const BitVector> codewords,
                              std::span<const int> T, std::string code_id = {});

// Candidate set taken verbatim from a block list (duplicates kept).
CandidateSet candidate_set_from_blocks(int length, std::span<const Block> blocks,
                                       std::span<const int> T = {}, std::string code_id = {});

using PointPair = std::pair<int, int>;

struct PairGraph {
  PointPair pair;
  std::vector<int> vertices;  // indices into CandidateSet::blocks, ascending
  Graph graph;
};

PairGraph pair_graph(const CandidateSet& x, int i, int j, const SearchParams& params = {});

// Γ_ij restricted to blocks B with |B ∩ B'| ∈ compatible_intersections for
// every other member B' of K (K given as indices into x.blocks).
PairGraph refined_graph(const CandidateSet& x, int i, int j, std::span<const int> clique,
                        const SearchParams& params = {});

bool has_clique(const PairGraph& g, int size);

// First pair, in ascending (|V(Γ_ij)|, i, j) order, whose Γ_ij has no
// λ-clique; empty when every pair passes.
std::optional<PointPair> stage1(const CandidateSet& x, const SearchParams& params = {});
std::optional<PointPair> stage1(const LinearCode& c, std::span<const int> T,
                                const SearchParams& params = {});

struct BasePair {
  PointPair pair;
  CliqueCount cliques;
};

// Pair whose Γ_ij has the fewest λ-cliques (capped counts rank last), ties
// broken lexicographically.
BasePair choose_base_pair(const CandidateSet& x, const SearchParams& params = {});

enum class Outcome { ExcludedStage1, ExcludedStage2, Survivor, Error };

const char* to_string(Outcome o);

struct Verdict {
  std::string code_id;
  std::vector<int> T;
  Outcome outcome = Outcome::Error;
  std::optional<PointPair> witness;           // stage-1 pair or stage-2 base pair
  std::uint64_t clique_count = 0;             // stage 2: λ-cliques K examined
  std::vector<std::vector<int>> survivor_clique;  // blocks of K, as point lists
  std::string error;
  double elapsed_ms = 0.0;

  // Equality ignores timing.
  bool same_result(const Verdict& other) const;
};

// Runs stage 2; throws Stage2Overflow when Γ_{i0,j0} has more than
// clique_cap λ-cliques and InternalConsistency when it has none.
Verdict stage2(const CandidateSet& x, const SearchParams& params = {});
Verdict stage2(const LinearCode& c, std::span<const int> T, const SearchParams& params = {});

// stage1, then stage2 when needed; errors become Outcome::Error.
Verdict search_triple(const CandidateSet& x, const SearchParams& params = {});

struct CodeEntry {
  std::string id;
  LinearCode code;
};

struct CodeSummary {
  std::string code_id;
  std::size_t admissible_triples = 0;
  std::size_t excluded_stage1 = 0;
  std::size_t excluded_stage2 = 0;
  std::size_t survivors = 0;
  std::size_t errors = 0;
  std::string note;  // "no admissible T" or a code-level error
};

struct PipelineConfig {
  SearchParams params;
  int workers = 1;
};

struct PipelineResult {
  std::vector<Verdict> verdicts;    // canonical (code, T) order
  std::vector<CodeSummary> codes;   // input order

  std::size_t count(Outcome o) const;
  // Codes for which every admissible triple fell at stage 1 (including codes
  // with no admissible triple) and no error occurred.
  std::size_t codes_settled_by_stage1() const;
};

PipelineResult run_pipeline(std::span<const CodeEntry> codes, const PipelineConfig& config);

// 0: no survivor and no error, 2: some survivor, 1: otherwise.
int exit_code(const PipelineResult& result);

}  // namespace qsd
