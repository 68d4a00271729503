#include "qsd/report.hpp"

#include <cstdio>
#include <ostream>

namespace qsd {

using nlohmann::json;

std::string config_hash(const json& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json report_header(const std::string& command, const json& config, std::uint64_t seed) {
  return json{{"type", "header"},         {"tool", kToolName},
              {"version", kToolVersion},  {"command", command},
              {"seed", seed},             {"config_hash", config_hash(config)},
              {"config", config}};
}

json verdict_to_json(const Verdict& v, bool include_timing) {
  json j{{"type", "verdict"},
         {"code_id", v.code_id},
         {"T", v.T},
         {"outcome", to_string(v.outcome)},
         {"witness", nullptr},
         {"clique_count", v.clique_count}};
  if (v.witness) j["witness"] = json::array({v.witness->first, v.witness->second});
  if (v.outcome == Outcome::Survivor) j["clique"] = v.survivor_clique;
  if (v.outcome == Outcome::Error) j["error"] = v.error;
  if (include_timing) j["elapsed_ms"] = v.elapsed_ms;
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.code_id = j.at("code_id").get<std::string>();
  v.T = j.at("T").get<std::vector<int>>();
  const auto outcome = j.at("outcome").get<std::string>();
  for (Outcome o : {Outcome::ExcludedStage1, Outcome::ExcludedStage2, Outcome::Survivor,
                    Outcome::Error}) {
    if (outcome == to_string(o)) v.outcome = o;
  }
  if (!j.at("witness").is_null()) {
    const auto w = j.at("witness").get<std::vector<int>>();
    if (w.size() != 2) throw Error(ErrorKind::Parse, "witness must be a pair");
    v.witness = PointPair{w[0], w[1]};
  }
  v.clique_count = j.at("clique_count").get<std::uint64_t>();
  if (j.contains("clique")) v.survivor_clique = j.at("clique").get<std::vector<std::vector<int>>>();
  if (j.contains("error")) v.error = j.at("error").get<std::string>();
  if (j.contains("elapsed_ms")) v.elapsed_ms = j.at("elapsed_ms").get<double>();
  return v;
}

json summary_to_json(const PipelineResult& result) {
  json no_admissible = json::array();
  json code_errors = json::array();
  std::size_t reaching_stage2 = 0;
  for (const auto& c : result.codes) {
    if (c.note == "no admissible T") no_admissible.push_back(c.code_id);
    if (c.note.rfind("error", 0) == 0) code_errors.push_back({{"code_id", c.code_id}, {"error", c.note}});
    if (c.excluded_stage2 + c.survivors > 0) ++reaching_stage2;
  }
  return json{{"type", "summary"},
              {"codes", result.codes.size()},
              {"tasks", result.verdicts.size()},
              {"excluded_stage1", result.count(Outcome::ExcludedStage1)},
              {"excluded_stage2", result.count(Outcome::ExcludedStage2)},
              {"survivors", result.count(Outcome::Survivor)},
              {"errors", result.count(Outcome::Error)},
              {"codes_settled_by_stage1", result.codes_settled_by_stage1()},
              {"codes_reaching_stage2", reaching_stage2},
              {"codes_without_admissible_T", no_admissible},
              {"code_errors", code_errors}};
}

void write_verdict_stream(std::ostream& out, const json& header, const PipelineResult& result,
                          bool include_timing) {
  out << header.dump() << '\n';
  for (const auto& v : result.verdicts) out << verdict_to_json(v, include_timing).dump() << '\n';
  out << summary_to_json(result).dump() << '\n';
}

}  // namespace qsd
