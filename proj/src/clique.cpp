#include "qsd/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace qsd {

namespace {

using Bits = std::vector<Word>;

int popcount(std::span<const Word> s) {
  int c = 0;
  for (Word w : s) c += std::popcount(w);
  return c;
}

void set_bit(std::span<Word> s, int v) {
  s[static_cast<std::size_t>(v / kWordBits)] |= Word{1} << (v % kWordBits);
}

void clear_bit(std::span<Word> s, int v) {
  s[static_cast<std::size_t>(v / kWordBits)] &= ~(Word{1} << (v % kWordBits));
}

int first_bit(std::span<const Word> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(s[i]);
  }
  return -1;
}

// Repeatedly drops vertices of degree < size-1; they lie in no clique of
// that size. Returns the surviving vertex list, ascending.
std::vector<int> core_vertices(const Graph& g, int size) {
  const int n = g.num_vertices();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] >= size - 1) {
        continue;
      }
      alive[static_cast<std::size_t>(v)] = false;
      changed = true;
      for (int u = 0; u < n; ++u) {
        if (alive[static_cast<std::size_t>(u)] && g.adjacent(u, v)) --deg[static_cast<std::size_t>(u)];
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (alive[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

class PivotSearch {
 public:
  PivotSearch(const Graph& g, int size) : g_(g), size_(size), w_(g.words_per_row()) {}

  bool run(std::vector<int>* witness) {
    const int n = g_.num_vertices();
    Bits p(static_cast<std::size_t>(w_), 0);
    Bits x(static_cast<std::size_t>(w_), 0);
    for (int v = 0; v < n; ++v) set_bit(p, v);
    stack_.clear();
    const bool found = expand(p, x);
    if (found && witness) *witness = stack_;
    return found;
  }

 private:
  bool expand(Bits& p, Bits& x) {
    const int r = static_cast<int>(stack_.size());
    if (r >= size_) return true;
    int pc = popcount(p);
    if (pc == 0 || r + pc < size_) return false;

    // Pivot maximising |P ∩ N(u)| over P ∪ X.
    int pivot = -1;
    int best = -1;
    for (std::size_t wi = 0; wi < p.size(); ++wi) {
      Word m = p[wi] | x[wi];
      while (m) {
        const int u = static_cast<int>(wi) * kWordBits + std::countr_zero(m);
        m &= m - 1;
        auto nu = g_.row(u);
        int c = 0;
        for (std::size_t k = 0; k < p.size(); ++k) c += std::popcount(p[k] & nu[k]);
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    }
    Bits cand(p.size());
    auto np = g_.row(pivot);
    for (std::size_t k = 0; k < p.size(); ++k) cand[k] = p[k] & ~np[k];

    Bits p2(p.size());
    Bits x2(p.size());
    for (int v = first_bit(cand); v >= 0; v = first_bit(cand)) {
      clear_bit(cand, v);
      auto nv = g_.row(v);
      for (std::size_t k = 0; k < p.size(); ++k) {
        p2[k] = p[k] & nv[k];
        x2[k] = x[k] & nv[k];
      }
      stack_.push_back(v);
      if (expand(p2, x2)) return true;
      stack_.pop_back();
      clear_bit(p, v);
      set_bit(x, v);
      if (r + --pc < size_) return false;
    }
    return false;
  }

  const Graph& g_;
  int size_;
  int w_;
  std::vector<int> stack_;
};

// Degree-descending relabelling of the (size-1)-core.
struct Ordered {
  Graph graph;
  std::vector<int> original;  // new label -> old label
};

Ordered order_by_degree(const Graph& g, int size) {
  std::vector<int> keep = core_vertices(g, size);
  std::stable_sort(keep.begin(), keep.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return {g.induced(keep), keep};
}

class ExactCliques {
 public:
  ExactCliques(const Graph& g, int size, const std::function<bool(std::span<const int>)>& visit)
      : g_(g), size_(size), visit_(visit) {}

  void run() {
    Bits p(static_cast<std::size_t>(g_.words_per_row()), 0);
    for (int v = 0; v < g_.num_vertices(); ++v) set_bit(p, v);
    stop_ = false;
    expand(p);
  }

 private:
  void expand(Bits& p) {
    const int r = static_cast<int>(stack_.size());
    if (r == size_) {
      if (!visit_(stack_)) stop_ = true;
      return;
    }
    int pc = popcount(p);
    Bits next(p.size());
    for (int v = first_bit(p); v >= 0 && !stop_; v = first_bit(p)) {
      if (r + pc < size_) return;
      clear_bit(p, v);
      --pc;
      auto nv = g_.row(v);
      for (std::size_t k = 0; k < p.size(); ++k) next[k] = p[k] & nv[k];
      stack_.push_back(v);
      expand(next);
      stack_.pop_back();
    }
  }

  const Graph& g_;
  int size_;
  const std::function<bool(std::span<const int>)>& visit_;
  std::vector<int> stack_;
  bool stop_ = false;
};

}  // namespace

Graph::Graph(int n)
    : n_(n),
      words_(std::max(1, (n + kWordBits - 1) / kWordBits)),
      adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0) {}

void Graph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) {
    throw Error(ErrorKind::Dimension, "edge endpoint outside 0.." + std::to_string(n_ - 1));
  }
  if (a == b) throw Error(ErrorKind::Precondition, "self-loop at vertex " + std::to_string(a));
  adj_[static_cast<std::size_t>(a) * static_cast<std::size_t>(words_) +
       static_cast<std::size_t>(b / kWordBits)] |= Word{1} << (b % kWordBits);
  adj_[static_cast<std::size_t>(b) * static_cast<std::size_t>(words_) +
       static_cast<std::size_t>(a / kWordBits)] |= Word{1} << (a % kWordBits);
}

bool Graph::adjacent(int a, int b) const {
  return (row(a)[static_cast<std::size_t>(b / kWordBits)] >> (b % kWordBits)) & 1U;
}

int Graph::degree(int v) const { return popcount(row(v)); }

Graph Graph::induced(std::span<const int> keep) const {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (adjacent(keep[a], keep[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return h;
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!g.adjacent(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int size) {
  if (size <= 0) return std::vector<int>{};
  const Ordered ord = order_by_degree(g, size);
  std::vector<int> witness;
  if (!PivotSearch(ord.graph, size).run(&witness)) return std::nullopt;
  for (int& v : witness) v = ord.original[static_cast<std::size_t>(v)];
  std::sort(witness.begin(), witness.end());
  return witness;
}

bool has_clique(const Graph& g, int size) {
  if (size <= 0) return true;
  const Ordered ord = order_by_degree(g, size);
  if (ord.graph.num_vertices() < size) return false;
  return PivotSearch(ord.graph, size).run(nullptr);
}

CliqueCount count_cliques(const Graph& g, int size, std::uint64_t cap) {
  CliqueCount out;
  for_each_clique(g, size, [&](std::span<const int>) {
    if (out.count == cap) {
      out.capped = true;
      return false;
    }
    ++out.count;
    return true;
  });
  return out;
}

void for_each_clique(const Graph& g, int size,
                     const std::function<bool(std::span<const int>)>& visit) {
  if (size <= 0) {
    visit({});
    return;
  }
  ExactCliques(g, size, visit).run();
}

}  // namespace qsd
