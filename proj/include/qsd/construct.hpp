#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qsd/code.hpp"

namespace qsd {

// Neighbor-walk sampler settings.
struct WalkConfig {
  std::uint64_t seed = 1;
  int steps = 200;           // accepted moves per walk
  int target_length = 40;
  int target_min_weight = 8;
  int max_restarts = 4;      // walks attempted before giving up
};

// "e8" (extended Hamming [8,4,4]) or "e8_<k>" (direct sum of k copies).
LinearCode seed_code(const std::string& name);

// Smallest-first extension of a doubly even code to a doubly even
// self-dual code of the same length. `budget` bounds log2 of the number of
// coset representatives visited per extension step.
LinearCode embed_doubly_even_self_dual(const LinearCode& c,
                                       int budget = kDefaultEnumerationBudget);

// ⟨C ∩ v^⊥, v⟩ for doubly even self-dual C and wt(v) ≡ 0 (mod 4), v ∉ C.
LinearCode neighbor(const LinearCode& c, const BitVector& v);

// Random neighbor walk from e8_{n/8}; returns the distinct visited codes
// whose minimum weight equals config.target_min_weight.
std::vector<LinearCode> sample_extremal(const WalkConfig& config);

// sample_extremal restricted to length 40, minimum weight 8.
std::vector<LinearCode> sample_extremal_40(const WalkConfig& config);

LinearCode load_code(const std::filesystem::path& path);
void save_code(const LinearCode& c, const std::filesystem::path& path);

}  // namespace qsd
