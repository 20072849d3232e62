#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tin/graph.hpp"
#include "tin/groups.hpp"
#include "tin/refine.hpp"

namespace tin {

// Isomorphism-invariant cell selection rules; all are functions of the
// current stable coloring only.
//   MinColor: non-singleton class with the smallest canonical identifier.
//   MaxSize:  largest non-singleton class, ties by smallest identifier.
//   First:    smallest non-singleton class, ties by smallest identifier.
enum class SelectorRule { MinColor, MaxSize, First };

SelectorRule parse_selector(const std::string& name);

// Color of the selected cell; nullopt when the coloring is discrete.
std::optional<Color> select_cell(SelectorRule rule, const StableColoring& pi);

struct ChoicePolicy {
  enum class Kind { FirstVertex, SeededRandom, Scripted };
  Kind kind = Kind::FirstVertex;
  std::uint64_t seed = 0;
  std::vector<int> script;  // one vertex per step, must lie in the selected cell

  static ChoicePolicy first_vertex() { return {}; }
  static ChoicePolicy seeded_random(std::uint64_t seed) {
    return {Kind::SeededRandom, seed, {}};
  }
  static ChoicePolicy scripted(std::vector<int> vs) {
    return {Kind::Scripted, 0, std::move(vs)};
  }
};

struct StepRecord {
  Color cell_color;
  int u = -1;  // chosen in g
  int v = -1;  // chosen in h
  std::vector<int> class_sizes_after;  // sorted ascending
};

/// Replayable record of one Tinhofer run: re-running with the recorded
/// vertices as scripted policies reproduces the verdict.
struct RunTranscript {
  std::vector<StepRecord> steps;
  bool isomorphic = false;
  std::string note;  // diagnostic for NotIsomorphic-with-failed-check runs
};

struct TinhoferResult {
  std::optional<Permutation> bijection;  // present iff verdict Isomorphic
  RunTranscript transcript;
};

// Tinhofer's individualization-refinement isomorphism test. Isomorphic
// verdicts always carry an edge-by-edge verified bijection; NotIsomorphic
// verdicts may be wrong for isomorphic inputs when g is not Tinhofer.
TinhoferResult tinhofer_iso(const ColoredGraph& g, const ColoredGraph& h,
                            SelectorRule sel, const ChoicePolicy& pol_g,
                            const ChoicePolicy& pol_h);

struct IRNode {
  std::vector<int> gamma;
  StableColoring coloring;
  QuotientGraph quot;
  std::optional<Color> selected;  // cell whose vertices spawn the children
  std::vector<int> children;      // node indices, ascending vertex order
};

/// Breadth-complete individualization-refinement tree to a fixed depth; a
/// node is a leaf when its coloring is discrete or the depth is reached.
struct IRTree {
  std::vector<IRNode> nodes;  // nodes[0] is the root, BFS order

  std::vector<int> at_depth(int depth) const;  // nodes with |gamma| == depth
};

IRTree build_ir_tree(const ColoredGraph& g, SelectorRule sel, int depth,
                     std::size_t node_cap = 1'000'000);

// Deterministic DOT digraph; labels show gamma (1-based) and the class-size
// profile.
std::string export_dot(const IRTree& t);

// FPT isomorphism: (n - budget) Tinhofer steps with the default selector and
// first-vertex policies, then exhaustive color-respecting completion over
// the remaining non-singleton classes. Correct whenever g is
// (n - budget)-Tinhofer; that precondition is not checked here.
std::optional<Permutation> fpt_iso(const ColoredGraph& g, const ColoredGraph& h,
                                   int budget,
                                   SelectorRule sel = SelectorRule::MinColor);

}  // namespace tin
