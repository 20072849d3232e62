#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tin/graph.hpp"
#include "tin/groups.hpp"
#include "tin/tinhofer.hpp"

namespace tin {

/// Verdict of one k-level membership check. When member is false the
/// witness holds two individualization sequences whose replay (refine_seq)
/// yields non-isomorphic colored graphs.
struct HierarchyVerdict {
  int k = 0;
  bool member = true;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  std::string method;
};

struct HierarchyOptions {
  // Restrict the first-copy vertex choices to one representative per
  // automorphism orbit of the current colored state. Off by default; the
  // unpruned search is the trusted baseline.
  bool orbit_prune = false;
  std::size_t node_cap = 10'000'000;
  GroupLimits limits;
};

// Exhaustive adversarial search over paired individualization sequences on
// two copies of g: every non-singleton class as the cell, every vertex pair
// (u, v) inside it. member = true iff no sequence of length <= k produces
// non-isomorphic colored results.
HierarchyVerdict is_k_tinhofer_operational(const ColoredGraph& g, int k,
                                           const HierarchyOptions& opts = {});

// member = true iff for every S with |S| <= k-1 the orbit partition of the
// pointwise stabilizer equals the partition obtained by individualizing S
// and refining.
HierarchyVerdict is_k_tinhofer_algebraic(const ColoredGraph& g, int k,
                                         const HierarchyOptions& opts = {});

// Necessary-condition cross-check: builds the depth-(k-1) tree for g and
// for a relabeled copy and demands that every quotient reached in g's tree
// is also reached at the same depth in the copy's tree. Not a decision
// procedure on its own.
HierarchyVerdict is_k_tinhofer_irtree(const ColoredGraph& g, int k,
                                      SelectorRule sel,
                                      const HierarchyOptions& opts = {});

// Largest j such that g is j-Tinhofer; n when no failing sequence exists.
int tinhofer_threshold(const ColoredGraph& g, const HierarchyOptions& opts = {});

struct ClassificationReport {
  bool discrete = false;
  bool refinable = false;
  int threshold = 0;
  std::optional<int> deficiency;  // n - 1 - threshold; absent when threshold = n
  bool tinhofer = false;
};

ClassificationReport classify(const ColoredGraph& g, const HierarchyOptions& opts = {});

}  // namespace tin
