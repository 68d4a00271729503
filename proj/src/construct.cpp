#include "qsd/construct.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace qsd {

namespace {

// Standard extended Hamming basis; mirrored in data/e8.txt.
constexpr const char* kE8Rows[] = {"11110000", "00111100", "00001111", "01010101"};

LinearCode e8() {
  BitMatrix m(8);
  for (const char* r : kE8Rows) m.append(BitVector::from_string(r));
  return LinearCode(m);
}

// Rows of `candidates` that are independent modulo `code`, reduced against it.
BitMatrix complement_basis(const LinearCode& code, const BitMatrix& candidates) {
  std::vector<BitVector> span_rows = code.basis().rows();
  std::vector<int> span_pivots = code.pivots();
  BitMatrix reps(code.length());
  for (const auto& cand : candidates.rows()) {
    BitVector r = cand;
    for (std::size_t i = 0; i < span_rows.size(); ++i) {
      if (r.get(span_pivots[i])) r ^= span_rows[i];
    }
    if (r.is_zero()) continue;
    const int pivot = r.support().front();
    for (auto& row : span_rows) {
      if (row.get(pivot)) row ^= r;
    }
    span_rows.push_back(r);
    span_pivots.push_back(pivot);
    reps.append(std::move(r));
  }
  return reps;
}

bool weight_below(const LinearCode& c, int target, bool& hits_target) {
  bool below = false;
  bool first = true;
  hits_target = false;
  enumerate_span(c.basis(), [&](const BitVector& v) {
    if (first) {
      first = false;
      return true;
    }
    const int w = v.weight();
    if (w < target) {
      below = true;
      return false;
    }
    if (w == target) hits_target = true;
    return true;
  });
  return below;
}

class WalkRng {
 public:
  explicit WalkRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  // Modulo reduction keeps the stream identical across standard libraries.
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
};

BitVector random_codeword(const LinearCode& c, WalkRng& rng) {
  BitVector v(c.length());
  std::uint64_t pool = 0;
  for (int i = 0; i < c.dimension(); ++i) {
    if (i % 64 == 0) pool = rng.bits();
    if ((pool >> (i % 64)) & 1U) v ^= c.basis().row(i);
  }
  return v;
}

// Sum of 1-3 random codewords plus a random even-weight perturbation.
BitVector propose(const LinearCode& c, WalkRng& rng) {
  const int n = c.length();
  BitVector v(n);
  const int terms = 1 + rng.below(3);
  for (int t = 0; t < terms; ++t) v ^= random_codeword(c, rng);

  const int pw = 2 * (1 + rng.below(4));
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < pw && i < n; ++i) {
    const int j = i + rng.below(n - i);
    std::swap(coords[static_cast<std::size_t>(i)], coords[static_cast<std::size_t>(j)]);
    v.flip(coords[static_cast<std::size_t>(i)]);
  }
  return v;
}

}  // namespace

LinearCode seed_code(const std::string& name) {
  if (name == "e8") return e8();
  if (name.rfind("e8_", 0) == 0) {
    int copies = 0;
    const char* first = name.data() + 3;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, copies);
    if (ec == std::errc{} && ptr == last && copies >= 1) {
      LinearCode out = e8();
      for (int i = 1; i < copies; ++i) out = direct_sum(out, e8());
      return out;
    }
  }
  throw Error(ErrorKind::UnknownSeed, "unknown seed code '" + name + "'");
}

LinearCode embed_doubly_even_self_dual(const LinearCode& c, int budget) {
  const int n = c.length();
  if (n <= 0 || n % 8 != 0) {
    throw Error(ErrorKind::NoSelfDualCode,
                "no doubly even self-dual code of length " + std::to_string(n));
  }
  if (!is_doubly_even(c)) {
    throw Error(ErrorKind::Precondition, "embedding requires a doubly even code");
  }

  const std::uint64_t max_visits =
      budget >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << budget);
  LinearCode current = c;
  while (2 * current.dimension() < n) {
    // Weight mod 4 is constant on each coset of `current` inside its dual,
    // so scanning one representative per coset suffices.
    const BitMatrix reps = complement_basis(current, dual(current).basis());
    const int k = reps.nrows();
    BitVector probe(n);
    bool found = false;
    std::uint64_t visits = 0;
    for (std::uint64_t t = 1; k < 64 ? t < (std::uint64_t{1} << k) : true; ++t) {
      if (++visits > max_visits) {
        throw Error(ErrorKind::EnumerationBudget,
                    "embedding search exceeded 2^" + std::to_string(budget) + " visits");
      }
      probe ^= reps.row(std::countr_zero(t));
      if (probe.weight() % 4 == 0) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::InternalConsistency, "no doubly even coset found during embedding");
    }
    std::vector<BitVector> rows = current.basis().rows();
    rows.push_back(probe);
    current = LinearCode(n, std::move(rows));
  }
  return current;
}

LinearCode neighbor(const LinearCode& c, const BitVector& v) {
  if (v.length() != c.length()) throw Error(ErrorKind::Dimension, "neighbor vector length mismatch");
  if (v.weight() % 4 != 0) {
    throw Error(ErrorKind::Precondition, "neighbor vector weight must be divisible by 4");
  }
  if (c.contains(v)) throw Error(ErrorKind::DegenerateNeighbor, "neighbor vector lies in the code");

  std::vector<BitVector> rows;
  const BitVector* odd = nullptr;
  for (const auto& r : c.basis().rows()) {
    if (dot(r, v) == 0) {
      rows.push_back(r);
    } else if (odd == nullptr) {
      odd = &r;
    } else {
      rows.push_back(add(r, *odd));
    }
  }
  if (odd == nullptr) {
    // v ∈ C^⊥ but v ∉ C, so C was not self-dual.
    throw Error(ErrorKind::Precondition, "neighbor requires a self-dual code");
  }
  rows.push_back(v);
  return LinearCode(c.length(), std::move(rows));
}

std::vector<LinearCode> sample_extremal(const WalkConfig& config) {
  if (config.steps < 1) throw Error(ErrorKind::Precondition, "walk needs at least one step");
  if (config.target_length <= 0 || config.target_length % 8 != 0) {
    throw Error(ErrorKind::NoSelfDualCode, "no doubly even self-dual code of length " +
                                               std::to_string(config.target_length));
  }
  const LinearCode start = seed_code("e8_" + std::to_string(config.target_length / 8));
  const std::uint64_t max_rejections = 10000ULL * static_cast<std::uint64_t>(config.steps);

  WalkRng rng(config.seed);
  for (int attempt = 0; attempt < std::max(config.max_restarts, 1); ++attempt) {
    std::vector<LinearCode> kept;
    std::set<std::string> seen;
    LinearCode current = start;
    std::uint64_t rejections = 0;
    for (int accepted = 0; accepted < config.steps;) {
      const BitVector v = propose(current, rng);
      if (v.weight() % 4 != 0 || current.contains(v)) {
        if (++rejections > max_rejections) break;
        continue;
      }
      current = neighbor(current, v);
      ++accepted;
      bool hits = false;
      if (!weight_below(current, config.target_min_weight, hits) && hits) {
        if (seen.insert(format_code(current)).second) kept.push_back(current);
      }
    }
    if (!kept.empty()) return kept;
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no code of minimum weight " + std::to_string(config.target_min_weight) +
                  " found in " + std::to_string(config.max_restarts) + " walks of " +
                  std::to_string(config.steps) + " steps");
}

std::vector<LinearCode> sample_extremal_40(const WalkConfig& config) {
  if (config.target_length != 40) {
    throw Error(ErrorKind::Precondition, "sample_extremal_40 requires target_length = 40");
  }
  WalkConfig c = config;
  c.target_min_weight = extremal_bound(40);
  return sample_extremal(c);
}

LinearCode load_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  try {
    return parse_code(in);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    throw;
  }
}

void save_code(const LinearCode& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Precondition, "cannot write " + path.string());
  out << format_code(c);
}

}  // namespace qsd
