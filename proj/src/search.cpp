#include "qsd/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qsd/obstruction.hpp"

namespace qsd {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::ExcludedStage1: return "ExcludedStage1";
    case Outcome::ExcludedStage2: return "ExcludedStage2";
    case Outcome::Survivor: return "Survivor";
    case Outcome::Error: return "Error";
  }
  return "Error";
}

bool CandidateSet::in_T(int p) const { return std::binary_search(T.begin(), T.end(), p); }

bool Verdict::same_result(const Verdict& o) const {
  return code_id == o.code_id && T == o.T && outcome == o.outcome && witness == o.witness &&
         clique_count == o.clique_count && survivor_clique == o.survivor_clique && error == o.error;
}

namespace {

std::vector<int> sorted_points(std::span<const int> pts) {
  std::vector<int> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_pair(const CandidateSet& x, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > x.length || j > x.length) {
    throw Error(ErrorKind::Precondition, "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                             ") is not two distinct points");
  }
  if (x.in_T(i) || x.in_T(j)) {
    throw Error(ErrorKind::Precondition, "pair point lies in T");
  }
}

bool compatible(const SearchParams& params, int meet) {
  const auto& c = params.compatible_intersections;
  return std::find(c.begin(), c.end(), meet) != c.end();
}

PairGraph build_graph(const CandidateSet& x, PointPair pair, std::vector<int> vertices,
                      const SearchParams& params) {
  PairGraph g;
  g.pair = pair;
  g.graph = Graph(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    const auto& ba = x.blocks[static_cast<std::size_t>(vertices[a])];
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const auto& bb = x.blocks[static_cast<std::size_t>(vertices[b])];
      if (intersection_size(ba, bb) == params.adjacency_intersection) {
        g.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  g.vertices = std::move(vertices);
  return g;
}

// Block lists per point pair, restricted to blocks with mask[b] set.
class PairIndex {
 public:
  PairIndex(const CandidateSet& x, const std::vector<bool>& mask) : n_(x.length) {
    lists_.resize(static_cast<std::size_t>((n_ + 1) * (n_ + 1)));
    for (std::size_t b = 0; b < x.blocks.size(); ++b) {
      if (!mask[b]) continue;
      const auto pts = x.blocks[b].support();
      for (std::size_t p = 0; p < pts.size(); ++p) {
        for (std::size_t q = p + 1; q < pts.size(); ++q) {
          lists_[index(pts[p], pts[q])].push_back(static_cast<int>(b));
        }
      }
    }
    for (int i = 1; i <= n_; ++i) {
      if (x.in_T(i)) continue;
      for (int j = i + 1; j <= n_; ++j) {
        if (!x.in_T(j)) pairs_.emplace_back(i, j);
      }
    }
  }

  const std::vector<int>& blocks(PointPair p) const { return lists_[index(p.first, p.second)]; }
  const std::vector<PointPair>& pairs() const { return pairs_; }

  // Pairs by ascending (|V|, i, j).
  std::vector<PointPair> by_size() const {
    std::vector<PointPair> out = pairs_;
    std::stable_sort(out.begin(), out.end(), [&](const PointPair& a, const PointPair& b) {
      return blocks(a).size() < blocks(b).size();
    });
    return out;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<std::vector<int>> lists_;
  std::vector<PointPair> pairs_;
};

std::optional<PointPair> first_failing_pair(const CandidateSet& x, const std::vector<bool>& mask,
                                            const SearchParams& params) {
  const PairIndex index(x, mask);
  for (const auto& pair : index.by_size()) {
    const auto& verts = index.blocks(pair);
    if (static_cast<int>(verts.size()) < params.lambda) return pair;
    const PairGraph g = build_graph(x, pair, verts, params);
    if (!has_clique(g.graph, params.lambda)) return pair;
  }
  return std::nullopt;
}

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

CandidateSet candidate_blocks(int length, std::span<const BitVector> codewords,
                              std::span<const int> T, std::string code_id) {
  CandidateSet x;
  x.code_id = std::move(code_id);
  x.length = length;
  x.T = sorted_points(T);
  const BitVector mask = BitVector::from_support(length, x.T);
  for (const auto& w : codewords) {
    if (!covers(w, mask)) continue;
    BitVector b = w;
    b ^= mask;
    x.blocks.push_back(std::move(b));
  }
  std::sort(x.blocks.begin(), x.blocks.end());
  return x;
}

CandidateSet candidate_blocks(const LinearCode& c, std::span<const int> T,
                              const SearchParams& params, std::string code_id) {
  const auto words = codewords_of_weight(c, params.block_weight, T, params.budget);
  return candidate_blocks(c.length(), words, T, std::move(code_id));
}

CandidateSet candidate_set_from_blocks(int length, std::span<const Block> blocks,
                                       std::span<const int> T, std::string code_id) {
  CandidateSet x;
  x.code_id = std::move(code_id);
  x.length = length;
  x.T = sorted_points(T);
  for (const auto& b : blocks) x.blocks.push_back(BitVector::from_support(length, b));
  return x;
}

PairGraph pair_graph(const CandidateSet& x, int i, int j, const SearchParams& params) {
  check_pair(x, i, j);
  BitVector through(x.length);
  through.set(i);
  through.set(j);
  std::vector<int> verts;
  for (std::size_t b = 0; b < x.blocks.size(); ++b) {
    if (covers(x.blocks[b], through)) verts.push_back(static_cast<int>(b));
  }
  return build_graph(x, {std::min(i, j), std::max(i, j)}, std::move(verts), params);
}

PairGraph refined_graph(const CandidateSet& x, int i, int j, std::span<const int> clique,
                        const SearchParams& params) {
  check_pair(x, i, j);
  BitVector through(x.length);
  through.set(i);
  through.set(j);
  std::vector<int> verts;
  for (std::size_t b = 0; b < x.blocks.size(); ++b) {
    if (!covers(x.blocks[b], through)) continue;
    bool ok = true;
    for (int k : clique) {
      if (static_cast<std::size_t>(k) == b) continue;
      if (!compatible(params, intersection_size(x.blocks[b], x.blocks[static_cast<std::size_t>(k)]))) {
        ok = false;
        break;
      }
    }
    if (ok) verts.push_back(static_cast<int>(b));
  }
  return build_graph(x, {std::min(i, j), std::max(i, j)}, std::move(verts), params);
}

bool has_clique(const PairGraph& g, int size) { return has_clique(g.graph, size); }

std::optional<PointPair> stage1(const CandidateSet& x, const SearchParams& params) {
  return first_failing_pair(x, std::vector<bool>(x.blocks.size(), true), params);
}

std::optional<PointPair> stage1(const LinearCode& c, std::span<const int> T,
                                const SearchParams& params) {
  return stage1(candidate_blocks(c, T, params), params);
}

BasePair choose_base_pair(const CandidateSet& x, const SearchParams& params) {
  const PairIndex index(x, std::vector<bool>(x.blocks.size(), true));
  std::optional<BasePair> best;
  auto rank = [](const CliqueCount& c) { return std::make_pair(c.capped, c.count); };
  for (const auto& pair : index.pairs()) {
    const PairGraph g = build_graph(x, pair, index.blocks(pair), params);
    const CliqueCount cnt = count_cliques(g.graph, params.lambda, params.clique_cap);
    if (!best || rank(cnt) < rank(best->cliques)) best = BasePair{pair, cnt};
  }
  if (!best) throw Error(ErrorKind::Precondition, "no point pair outside T");
  return *best;
}

Verdict stage2(const CandidateSet& x, const SearchParams& params) {
  Verdict v;
  v.code_id = x.code_id;
  v.T = x.T;

  const BasePair base = choose_base_pair(x, params);
  const PairGraph g0 = pair_graph(x, base.pair.first, base.pair.second, params);

  std::vector<std::vector<int>> cliques;
  bool overflow = false;
  for_each_clique(g0.graph, params.lambda, [&](std::span<const int> local) {
    if (cliques.size() >= params.clique_cap) {
      overflow = true;
      return false;
    }
    if (!is_clique(g0.graph, local)) {
      throw Error(ErrorKind::InternalConsistency, "enumerated vertex set is not a clique");
    }
    std::vector<int> k;
    for (int u : local) k.push_back(g0.vertices[static_cast<std::size_t>(u)]);
    cliques.push_back(std::move(k));
    return true;
  });
  if (overflow) {
    throw Error(ErrorKind::Stage2Overflow,
                "base pair graph has more than " + std::to_string(params.clique_cap) + " cliques");
  }
  if (cliques.empty()) {
    throw Error(ErrorKind::InternalConsistency, "base pair graph has no clique of size " +
                                                    std::to_string(params.lambda));
  }

  v.witness = base.pair;
  v.clique_count = cliques.size();
  for (const auto& k : cliques) {
    std::vector<bool> mask(x.blocks.size(), false);
    for (std::size_t b = 0; b < x.blocks.size(); ++b) {
      bool ok = true;
      for (int m : k) {
        if (static_cast<std::size_t>(m) == b) continue;
        if (!compatible(params, intersection_size(x.blocks[b], x.blocks[static_cast<std::size_t>(m)]))) {
          ok = false;
          break;
        }
      }
      mask[b] = ok;
    }
    if (first_failing_pair(x, mask, params)) continue;

    v.outcome = Outcome::Survivor;
    for (int m : k) v.survivor_clique.push_back(x.blocks[static_cast<std::size_t>(m)].support());
    return v;
  }
  v.outcome = Outcome::ExcludedStage2;
  return v;
}

Verdict stage2(const LinearCode& c, std::span<const int> T, const SearchParams& params) {
  return stage2(candidate_blocks(c, T, params), params);
}

Verdict search_triple(const CandidateSet& x, const SearchParams& params) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    if (auto w = stage1(x, params)) {
      v.code_id = x.code_id;
      v.T = x.T;
      v.outcome = Outcome::ExcludedStage1;
      v.witness = *w;
    } else {
      v = stage2(x, params);
    }
  } catch (const Error& e) {
    v = Verdict{};
    v.code_id = x.code_id;
    v.T = x.T;
    v.outcome = Outcome::Error;
    v.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  v.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::size_t PipelineResult::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [o](const Verdict& v) { return v.outcome == o; }));
}

std::size_t PipelineResult::codes_settled_by_stage1() const {
  return static_cast<std::size_t>(std::count_if(codes.begin(), codes.end(), [](const CodeSummary& s) {
    return s.errors == 0 && s.note.rfind("error", 0) != 0 && s.excluded_stage1 == s.admissible_triples;
  }));
}

namespace {

struct PreparedCode {
  std::vector<BitVector> blocks_source;  // codewords of the block weight
  TripleFilterResult triples;
};

PreparedCode prepare(const LinearCode& c, const SearchParams& params) {
  if (!is_doubly_even(c) || !is_self_dual(c)) {
    throw Error(ErrorKind::Precondition, "code is not doubly even self-dual");
  }
  std::vector<BitVector> weight8;
  PreparedCode out;
  bool light = false;
  bool first = true;
  enumerate_span(
      c.basis(),
      [&](const BitVector& w) {
        if (first) {
          first = false;
          return true;
        }
        const int wt = w.weight();
        if (wt < 8) {
          light = true;
          return false;
        }
        if (wt == 8) weight8.push_back(w);
        if (wt == params.block_weight) out.blocks_source.push_back(w);
        return true;
      },
      params.budget);
  if (light) throw Error(ErrorKind::Precondition, "code has minimum weight below 8");
  std::sort(out.blocks_source.begin(), out.blocks_source.end());
  out.triples = admissible_triples(c.length(), weight8);
  return out;
}

}  // namespace

PipelineResult run_pipeline(std::span<const CodeEntry> codes, const PipelineConfig& config) {
  PipelineResult result;
  for (const auto& entry : codes) {
    CodeSummary summary;
    summary.code_id = entry.id;
    PreparedCode prep;
    try {
      prep = prepare(entry.code, config.params);
    } catch (const Error& e) {
      Verdict v;
      v.code_id = entry.id;
      v.outcome = Outcome::Error;
      v.error = std::string(to_string(e.kind())) + ": " + e.what();
      summary.errors = 1;
      summary.note = "error: " + v.error;
      result.verdicts.push_back(std::move(v));
      result.codes.push_back(std::move(summary));
      continue;
    }

    const auto& triples = prep.triples.admissible;
    summary.admissible_triples = triples.size();
    if (triples.empty()) summary.note = "no admissible T";

    std::vector<Verdict> verdicts(triples.size());
    parallel_for(triples.size(), config.workers, [&](std::size_t t) {
      const auto start = std::chrono::steady_clock::now();
      const CandidateSet x =
          candidate_blocks(entry.code.length(), prep.blocks_source, triples[t], entry.id);
      Verdict v = search_triple(x, config.params);
      v.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      verdicts[t] = std::move(v);
    });

    for (auto& v : verdicts) {
      switch (v.outcome) {
        case Outcome::ExcludedStage1: ++summary.excluded_stage1; break;
        case Outcome::ExcludedStage2: ++summary.excluded_stage2; break;
        case Outcome::Survivor: ++summary.survivors; break;
        case Outcome::Error: ++summary.errors; break;
      }
      result.verdicts.push_back(std::move(v));
    }
    result.codes.push_back(std::move(summary));
  }
  return result;
}

int exit_code(const PipelineResult& result) {
  if (result.count(Outcome::Survivor) > 0) return 2;
  if (result.count(Outcome::Error) > 0) return 1;
  return 0;
}

}  // namespace qsd
