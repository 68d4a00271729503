#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsd/code.hpp"

namespace qsd {

// Parameters of a 2-(v, k, λ) design with the derived b and r.
struct DesignParams {
  int t = 2;
  int v = 0;
  int k = 0;
  int lambda = 0;
  int b = 0;
  int r = 0;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

// r = λ(v-1)/(k-1), b = vr/k; throws InfeasibleParameters unless both are
// integers and v > k >= 2.
DesignParams params_from(int v, int k, int lambda);

using Block = std::vector<int>;  // sorted 1-based points

// Points 1..v with an ordered multiset of blocks of a common size.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  explicit IncidenceStructure(int v, std::vector<Block> blocks = {});

  int num_points() const noexcept { return v_; }
  int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
  int block_size() const noexcept { return k_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

 private:
  int v_ = 0;
  int k_ = 0;
  std::vector<Block> blocks_;
};

// Blocks of `d` repeated `copies` times, in copy-major order.
IncidenceStructure repeat_blocks(const IncidenceStructure& d, int copies);

// Lines of the Fano plane 2-(7,3,1).
IncidenceStructure fano_plane();

bool is_2design(const IncidenceStructure& d, int lambda);

// Sizes |B ∩ B'| over position-distinct block pairs. Throws DegenerateDesign
// with fewer than two blocks.
std::set<int> intersection_numbers(const IncidenceStructure& d);

// (x, y) with x < y when exactly two intersection sizes occur.
std::optional<std::pair<int, int>> is_quasi_symmetric(const IncidenceStructure& d);

// b × v block-by-point matrix.
BitMatrix incidence_matrix(const IncidenceStructure& d);

// Row span of [A | 1 ... 1] with `border` all-ones columns; border ∈ {0,1,3}.
LinearCode bordered_code(const IncidenceStructure& d, int border);

// Text format: "v b" header, then b lines of space-separated 1-based points.
IncidenceStructure parse_design(std::istream& in);
IncidenceStructure load_design(const std::filesystem::path& path);
std::string format_design(const IncidenceStructure& d);

}  // namespace qsd
