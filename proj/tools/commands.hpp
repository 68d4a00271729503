#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "qsd/f2.hpp"

namespace qsd::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSurvivor = 2;

struct InfoOptions {
  std::filesystem::path code;
  int budget = kDefaultEnumerationBudget;
  bool json = false;
};

struct SampleOptions {
  std::uint64_t seed = 1;
  int steps = 200;
  int max_restarts = 4;
  int length = 40;
  std::filesystem::path out;
};

struct SearchOptions {
  std::filesystem::path codes;
  std::optional<std::filesystem::path> out;  // stdout when empty
  std::uint64_t seed = 0;                    // recorded in the header only
  int workers = 1;
  int budget = kDefaultEnumerationBudget;
  std::uint64_t clique_cap = 1'000'000;
  bool timings = false;
};

struct DesignOptions {
  std::filesystem::path design;
  int budget = kDefaultEnumerationBudget;
  bool json = false;
};

int cmd_info(const InfoOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err);
int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err);
int cmd_design(const DesignOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace qsd::cli
