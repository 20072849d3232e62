#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tin {

using Color = std::uint64_t;

/// Error raised by parsers, validators and size-bound checks.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Vertex-colored multigraph. Vertices are 0..n-1, edges carry a positive
/// integer multiplicity, self-loops are rejected. Values are treated as
/// immutable once fully constructed; no operation in this library mutates
/// its graph inputs.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int n) : n_(n), colors_(n, 0), adj_(n) {}

  int n() const { return n_; }

  void set_color(int v, Color c);
  Color color(int v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

  // Adds an undirected edge; throws on self-loop, out-of-range endpoint,
  // non-positive multiplicity, or an already present pair.
  void add_edge(int u, int v, long long mult = 1);

  // Multiplicity of {u,v}; 0 when absent.
  long long multiplicity(int u, int v) const;

  // Sorted (neighbor, multiplicity) list.
  const std::vector<std::pair<int, long long>>& neighbors(int v) const {
    return adj_[v];
  }

  // Multiplicity-weighted degree.
  long long weighted_degree(int v) const;

  // Number of distinct unordered edge pairs (header `m`).
  std::size_t edge_count() const;

  bool operator==(const ColoredGraph& other) const {
    return n_ == other.n_ && colors_ == other.colors_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  std::vector<Color> colors_;
  std::vector<std::vector<std::pair<int, long long>>> adj_;
};

/// Sorted duplicate-free set of vertex indices.
struct VertexSet {
  std::vector<int> members;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs);
  explicit VertexSet(std::vector<int> vs);

  bool contains(int v) const;
  std::size_t size() const { return members.size(); }
};

// `cgraph` text format (see README). 1-based vertices in the file,
// 0-based in memory.
ColoredGraph parse_graph(std::string_view text);
std::string serialize(const ColoredGraph& g);

// Named example graphs, all color 0: cycle <len>, path <len>,
// complete <n>, frucht.
ColoredGraph builtin(const std::string& name, const std::vector<int>& params);

// Places h after g; returns the combined graph and the index offset
// applied to h's vertices (= g.n()).
std::pair<ColoredGraph, int> disjoint_union(const ColoredGraph& g,
                                            const ColoredGraph& h);

// Copy of g with colors replaced by `colors` (size must equal n).
ColoredGraph with_colors(const ColoredGraph& g, const std::vector<Color>& colors);

// Copy of g with vertex i renamed to perm[i].
ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm);

}  // namespace tin
