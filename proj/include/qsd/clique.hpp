#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qsd/f2.hpp"

namespace qsd {

// Simple undirected graph on vertices 0..n-1 with bit-packed adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int num_vertices() const noexcept { return n_; }
  int words_per_row() const noexcept { return words_; }

  void add_edge(int a, int b);
  bool adjacent(int a, int b) const;
  int degree(int v) const;
  std::span<const Word> row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(words_),
            static_cast<std::size_t>(words_)};
  }

  // Induced subgraph on `keep`, relabelled 0..keep.size()-1 in that order.
  Graph induced(std::span<const int> keep) const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Word> adj_;
};

bool is_clique(const Graph& g, std::span<const int> vertices);

// Whether g has a clique on at least `size` vertices. Bron–Kerbosch with
// pivoting over a degree-ordered relabelling, pruned by |R| + |P| < size,
// returning on the first witness.
bool has_clique(const Graph& g, int size);

// A clique with at least `size` vertices (sorted ascending), if one exists.
std::optional<std::vector<int>> find_clique(const Graph& g, int size);

struct CliqueCount {
  std::uint64_t count = 0;
  bool capped = false;  // more than `cap` cliques exist; count == cap
};

// Number of cliques with exactly `size` vertices, stopping at `cap`.
CliqueCount count_cliques(const Graph& g, int size, std::uint64_t cap);

// Visits each clique of exactly `size` vertices as a sorted vertex list, in
// lexicographic order. Returning false from the visitor stops the walk.
void for_each_clique(const Graph& g, int size,
                     const std::function<bool(std::span<const int>)>& visit);

}  // namespace qsd
