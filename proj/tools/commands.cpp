#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qsd/construct.hpp"
#include "qsd/design.hpp"
#include "qsd/obstruction.hpp"
#include "qsd/report.hpp"
#include "qsd/search.hpp"

namespace qsd::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string flags(const LinearCode& c) {
  std::string s = is_self_dual(c) ? "self-dual" : "not-self-dual";
  s += is_doubly_even(c) ? " doubly-even" : " not-doubly-even";
  return s;
}

std::vector<fs::path> code_files(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().filename().string().front() != '.') {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

int cmd_info(const InfoOptions& opt, std::ostream& out, std::ostream& err) {
  LinearCode c;
  try {
    c = load_code(opt.code);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  json report{{"n", c.length()},
              {"k", c.dimension()},
              {"self_dual", is_self_dual(c)},
              {"doubly_even", is_doubly_even(c)}};
  std::vector<std::uint64_t> a;
  try {
    a = weight_enumerator(c, opt.budget);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  int d = -1;
  for (std::size_t w = 1; w < a.size(); ++w) {
    if (a[w] != 0) {
      d = static_cast<int>(w);
      break;
    }
  }
  json enumerator = json::object();
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] != 0) enumerator[std::to_string(w)] = a[w];
  }
  report["min_weight"] = d < 0 ? json(nullptr) : json(d);
  report["weight_enumerator"] = enumerator;

  if (opt.json) {
    json cfg{{"code", opt.code.filename().string()}, {"budget", opt.budget}};
    json header = report_header("info", cfg, 0);
    header["report"] = report;
    out << header.dump() << '\n';
    return kExitOk;
  }

  out << "n=" << c.length() << " k=" << c.dimension() << ' ' << flags(c)
      << " d=" << (d < 0 ? std::string("undefined") : std::to_string(d)) << '\n';
  out << "weight enumerator:";
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] != 0) out << " A" << w << '=' << a[w];
  }
  out << '\n';
  return kExitOk;
}

int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.out.empty()) {
    err << "error: --out directory is required\n";
    return kExitError;
  }
  WalkConfig cfg;
  cfg.seed = opt.seed;
  cfg.steps = opt.steps;
  cfg.max_restarts = opt.max_restarts;
  cfg.target_length = opt.length;

  std::vector<LinearCode> codes;
  try {
    cfg.target_min_weight = extremal_bound(opt.length);
    codes = sample_extremal(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  const json config{{"steps", cfg.steps},
                    {"max_restarts", cfg.max_restarts},
                    {"target_length", cfg.target_length},
                    {"target_min_weight", cfg.target_min_weight}};
  const std::string provenance = std::string("# ") + kToolName + " " + kToolVersion +
                                 " sample seed=" + std::to_string(opt.seed) +
                                 " config_hash=" + config_hash(config) + "\n";
  std::error_code ec;
  fs::create_directories(opt.out, ec);
  if (ec) {
    err << "error: cannot create " << opt.out.string() << ": " << ec.message() << '\n';
    return kExitError;
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "%04zu.txt", i);
    std::ofstream f(opt.out / name, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << (opt.out / name).string() << '\n';
      return kExitError;
    }
    f << provenance << format_code(codes[i]);
  }
  out << "wrote " << codes.size() << " codes of length " << opt.length << " (d="
      << cfg.target_min_weight << ") to " << opt.out.string() << " seed=" << opt.seed << '\n';
  return kExitOk;
}

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.codes.empty() || !fs::is_directory(opt.codes)) {
    err << "error: --codes must name a directory\n";
    return kExitError;
  }
  PipelineConfig pc;
  pc.workers = std::max(1, opt.workers);
  pc.params.budget = opt.budget;
  pc.params.clique_cap = opt.clique_cap;

  // workers is deliberately absent: it never changes the output.
  const json config{{"codes", opt.codes.filename().string()},
                    {"budget", opt.budget},
                    {"clique_cap", opt.clique_cap},
                    {"block_weight", pc.params.block_weight},
                    {"lambda", pc.params.lambda},
                    {"adjacency_intersection", pc.params.adjacency_intersection},
                    {"compatible_intersections", pc.params.compatible_intersections},
                    {"timings", opt.timings}};

  PipelineResult all;
  for (const auto& path : code_files(opt.codes)) {
    const std::string id = path.stem().string();
    LinearCode code;
    try {
      code = load_code(path);
    } catch (const Error& e) {
      err << "warning: skipping " << path.string() << ": " << e.what() << '\n';
      Verdict v;
      v.code_id = id;
      v.outcome = Outcome::Error;
      v.error = std::string(to_string(e.kind())) + ": " + e.what();
      CodeSummary s;
      s.code_id = id;
      s.errors = 1;
      s.note = "error: " + v.error;
      all.verdicts.push_back(std::move(v));
      all.codes.push_back(std::move(s));
      continue;
    }
    const CodeEntry entry{id, std::move(code)};
    PipelineResult r = run_pipeline(std::span<const CodeEntry>(&entry, 1), pc);
    for (auto& v : r.verdicts) all.verdicts.push_back(std::move(v));
    for (auto& s : r.codes) all.codes.push_back(std::move(s));
  }

  const json header = report_header("search", config, opt.seed);
  if (opt.out) {
    std::ofstream f(*opt.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << opt.out->string() << '\n';
      return kExitError;
    }
    write_verdict_stream(f, header, all, opt.timings);
  } else {
    write_verdict_stream(out, header, all, opt.timings);
  }

  std::ostream& human = opt.out ? out : err;
  human << "codes=" << all.codes.size() << " tasks=" << all.verdicts.size()
        << " stage1=" << all.count(Outcome::ExcludedStage1)
        << " stage2=" << all.count(Outcome::ExcludedStage2)
        << " survivors=" << all.count(Outcome::Survivor)
        << " errors=" << all.count(Outcome::Error)
        << " settled_by_stage1=" << all.codes_settled_by_stage1() << '\n';
  return exit_code(all);
}

int cmd_design(const DesignOptions& opt, std::ostream& out, std::ostream& err) {
  IncidenceStructure d;
  try {
    d = load_design(opt.design);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (d.num_blocks() < 2) {
    err << "error: design needs at least two blocks\n";
    return kExitError;
  }

  // λ read off the first pair; is_2design then checks every pair.
  int lambda = 0;
  for (const auto& b : d.blocks()) {
    if (std::binary_search(b.begin(), b.end(), 1) && std::binary_search(b.begin(), b.end(), 2)) {
      ++lambda;
    }
  }
  const bool design = lambda > 0 && is_2design(d, lambda);
  const auto xs = intersection_numbers(d);
  const auto qs = is_quasi_symmetric(d);

  json report{{"v", d.num_points()},
              {"b", d.num_blocks()},
              {"k", d.block_size()},
              {"is_2design", design},
              {"intersection_numbers", xs},
              {"quasi_symmetric", qs.has_value()}};
  std::ostringstream text;
  std::string sep;
  std::string xs_text = "{";
  for (int x : xs) {
    xs_text += sep + std::to_string(x);
    sep = ",";
  }
  xs_text += "}";

  if (!design) {
    text << "not a 2-design (v=" << d.num_points() << ", b=" << d.num_blocks()
         << ", k=" << d.block_size() << "), intersections " << xs_text << '\n';
  } else {
    DesignParams p;
    try {
      p = params_from(d.num_points(), d.block_size(), lambda);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitError;
    }
    report["lambda"] = lambda;
    report["r"] = p.r;
    text << "2-(" << p.v << ',' << p.k << ',' << p.lambda << "), r=" << p.r << ", b=" << p.b
         << ", intersections " << xs_text << ", ";
    if (qs) {
      text << "quasi-symmetric, x=" << qs->first << " y=" << qs->second << '\n';
      report["x"] = qs->first;
      report["y"] = qs->second;
      const bool d2 = check_lemma_d2_preconditions(p.v, p.k, qs->first, qs->second);
      report["bordered_code_doubly_even_conditions"] = d2;
      text << "v=5 mod 8, k=1 mod 4, x,y odd: " << (d2 ? "yes" : "no") << '\n';
    } else {
      text << "not quasi-symmetric\n";
    }

    try {
      const DualBoundReport dual = check_dual_min_weight_bounds(d, p, opt.budget);
      const C3PerpReport c3 = check_C3perp_bound(d, p, opt.budget);
      auto show = [](const std::optional<int>& w) {
        return w ? std::to_string(*w) : std::string("none");
      };
      text << "d(C1^perp)=" << show(dual.c1_dual_min_weight)
           << " >= (r+lambda)/lambda=" << dual.c1_bound.to_string() << ": "
           << (dual.c1_holds ? "holds" : "FAILS") << '\n';
      text << "d(C2^perp)=" << show(dual.c2_dual_min_weight) << " >= (b+r)/r="
           << dual.c2_bound.to_string() << ": " << (dual.c2_holds ? "holds" : "FAILS") << '\n';
      text << "min weight of C3^perp outside border pairs=" << show(c3.min_weight_outside_excluded)
           << " >= (b+r)/r=" << c3.bound.to_string() << ": " << (c3.holds ? "holds" : "FAILS")
           << '\n';
      report["c1_dual_min_weight"] = dual.c1_dual_min_weight ? json(*dual.c1_dual_min_weight) : json(nullptr);
      report["c1_bound"] = dual.c1_bound.to_string();
      report["c1_holds"] = dual.c1_holds;
      report["c2_dual_min_weight"] = dual.c2_dual_min_weight ? json(*dual.c2_dual_min_weight) : json(nullptr);
      report["c2_bound"] = dual.c2_bound.to_string();
      report["c2_holds"] = dual.c2_holds;
      report["c3_dual_min_weight_outside_border_pairs"] =
          c3.min_weight_outside_excluded ? json(*c3.min_weight_outside_excluded) : json(nullptr);
      report["c3_holds"] = c3.holds;
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitError;
    }
  }

  if (opt.json) {
    json cfg{{"design", opt.design.filename().string()}, {"budget", opt.budget}};
    json header = report_header("design", cfg, 0);
    header["report"] = report;
    out << header.dump() << '\n';
  } else {
    out << text.str();
  }
  return kExitOk;
}

}  // namespace qsd::cli
