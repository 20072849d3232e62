#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tin/graph.hpp"

namespace tin {

// Reserved identifier handed to the vertex individualized at step i.
// Step-indexed and identical across graphs, so colorings and quotient
// graphs produced by different runs stay comparable.
inline constexpr Color kIndivBase = Color{1} << 62;
inline constexpr Color indiv_color(int step) { return kIndivBase + static_cast<Color>(step); }

enum class Engine { Fast, Naive };

/// Vertex coloring fixed under one further refinement round. Canonical
/// color identifiers depend only on the refinement history (initial colors,
/// individualization steps, per-round signature order), never on vertex
/// indices, so equal identifiers mean equal structure across graphs.
struct StableColoring {
  std::vector<Color> assignment;
  int round_count = 0;
  // Continuation point for fresh identifiers; carried across the steps of
  // an individualization sequence.
  Color next_fresh = 0;

  // color -> sorted members, ordered by color.
  std::map<Color, std::vector<int>> classes() const;
  std::vector<Color> sorted_colors() const;  // multiset of colors
  bool is_discrete() const;
};

/// Labeled digraph on the color classes of a stable coloring. arc(i,j) is
/// the multiplicity-weighted number of neighbors a vertex of class i has in
/// class j; zero-count arcs are omitted.
struct QuotientGraph {
  std::vector<std::pair<Color, int>> nodes;  // (color, class size), sorted
  std::map<std::pair<Color, Color>, long long> arcs;

  bool operator==(const QuotientGraph&) const = default;
};

// Color refinement to a stable coloring. `start` overrides the graph's
// initial colors. Neighbor multisets are edge-multiplicity weighted.
StableColoring refine(const ColoredGraph& g,
                      const std::vector<Color>* start = nullptr,
                      Engine engine = Engine::Fast);

// Individualize gamma's vertices in order (step i gets indiv_color(i)),
// re-refining after each. Throws on a repeated vertex.
StableColoring refine_seq(const ColoredGraph& g, const std::vector<int>& gamma,
                          Engine engine = Engine::Fast);

// Simultaneously individualize all of s (reserved identifiers in ascending
// vertex order), then refine.
StableColoring p_set(const ColoredGraph& g, const VertexSet& s,
                     Engine engine = Engine::Fast);

// Quotient of a stable coloring; runs a verification pass and throws if the
// coloring is not actually stable for g.
QuotientGraph quotient(const ColoredGraph& g, const StableColoring& pi);

inline bool is_discrete(const StableColoring& pi) { return pi.is_discrete(); }

// Internal driver, exposed for the engines' equality tests: continues
// refinement from an explicit (colors, next_fresh) state.
StableColoring refine_from_state(const ColoredGraph& g, std::vector<Color> colors,
                                 Color next_fresh, Engine engine);

}  // namespace tin
