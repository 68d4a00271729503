#pragma once

// JSON-lines verdict stream: one header object, one object per verdict in
// canonical (code, T) order, one summary object.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "qsd/search.hpp"

namespace qsd {

inline constexpr const char* kToolName = "qsd";
inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a 64 over the compact dump of `config`, as 16 hex digits.
std::string config_hash(const nlohmann::json& config);

nlohmann::json report_header(const std::string& command, const nlohmann::json& config,
                             std::uint64_t seed);

// elapsed_ms is emitted only when include_timing is set, so that the
// default stream is byte-identical across runs and worker counts.
nlohmann::json verdict_to_json(const Verdict& v, bool include_timing);
Verdict verdict_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const PipelineResult& result);

void write_verdict_stream(std::ostream& out, const nlohmann::json& header,
                          const PipelineResult& result, bool include_timing);

}  // namespace qsd
