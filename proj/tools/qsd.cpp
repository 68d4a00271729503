#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qsd::cli;

  CLI::App app{"Self-dual code machinery and clique search for quasi-symmetric designs"};
  app.require_subcommand(1);

  InfoOptions info;
  auto* info_cmd = app.add_subcommand("info", "Print parameters and weight enumerator of a code");
  info_cmd->add_option("code", info.code, "Generator matrix file")->required()->check(CLI::ExistingFile);
  info_cmd->add_option("--budget", info.budget, "Enumeration budget (log2 of span size)");
  info_cmd->add_flag("--json", info.json, "Emit a JSON report");

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Sample extremal doubly even self-dual codes");
  sample_cmd->add_option("--seed", sample.seed, "RNG seed");
  sample_cmd->add_option("--steps", sample.steps, "Neighbor moves per walk");
  sample_cmd->add_option("--max-restarts", sample.max_restarts, "Walks attempted before giving up");
  sample_cmd->add_option("--length", sample.length, "Code length (multiple of 8)");
  sample_cmd->add_option("--out", sample.out, "Output directory")->required();

  SearchOptions search;
  search.workers = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::string codes_dir = env_or("QSD_CODES", "");
  auto* search_cmd = app.add_subcommand("search", "Run the two-stage clique search over a code directory");
  search_cmd->add_option("--codes", codes_dir, "Directory of code files (default $QSD_CODES)");
  std::string search_out;
  search_cmd->add_option("--out", search_out, "Verdict stream path (default stdout)");
  search_cmd->add_option("--seed", search.seed, "Seed recorded in the report header");
  search_cmd->add_option("--workers", search.workers, "Worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--budget", search.budget, "Enumeration budget (log2 of span size)");
  search_cmd->add_option("--clique-cap", search.clique_cap, "Clique count cap per graph");
  search_cmd->add_flag("--timings", search.timings, "Include elapsed_ms in verdicts");

  DesignOptions design;
  auto* design_cmd = app.add_subcommand("design", "Check a design file and its bordered codes");
  design_cmd->add_option("--design,design", design.design, "Design file")->required()->check(CLI::ExistingFile);
  design_cmd->add_option("--budget", design.budget, "Enumeration budget (log2 of span size)");
  design_cmd->add_flag("--json", design.json, "Emit a JSON report");

  CLI11_PARSE(app, argc, argv);

  if (*info_cmd) return cmd_info(info, std::cout, std::cerr);
  if (*sample_cmd) return cmd_sample(sample, std::cout, std::cerr);
  if (*search_cmd) {
    search.codes = codes_dir;
    if (!search_out.empty()) search.out = search_out;
    return cmd_search(search, std::cout, std::cerr);
  }
  return cmd_design(design, std::cout, std::cerr);
}
