#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tin/graph.hpp"
#include "tin/refine.hpp"

namespace tin {

/// Color- and adjacency-and-multiplicity-preserving bijection, stored as an
/// image list.
struct Permutation {
  std::vector<int> image;

  int operator()(int v) const { return image[v]; }
  bool operator==(const Permutation&) const = default;
};

struct GroupLimits {
  int max_n = 64;
  std::size_t max_group = 1'000'000;
};

/// Explicit list of automorphisms, each fixing `fixed` pointwise. Closed
/// under composition and inverse; contains the identity.
struct AutomorphismSet {
  std::vector<Permutation> perms;
  VertexSet fixed;
};

struct OrbitPartition {
  std::vector<std::vector<int>> classes;  // sorted members, ordered by min member
};

// Complete enumeration of the color-preserving automorphisms of g fixing
// every vertex of `fixed`. Backtracking over the refinement-pruned search
// tree; deterministic output order (candidate images in ascending vertex
// order). Throws when g.n() or the group size exceeds the limits.
AutomorphismSet automorphisms(const ColoredGraph& g, const VertexSet& fixed = {},
                              const GroupLimits& limits = {});

OrbitPartition orbit_partition(const AutomorphismSet& auts);

// Exact colored-isomorphism oracle; complete within the size limits.
std::optional<Permutation> exact_iso(const ColoredGraph& g, const ColoredGraph& h,
                                     const GroupLimits& limits = {});

// True iff refine(g)'s partition equals the orbit partition of Aut(g).
bool is_refinable(const ColoredGraph& g, const GroupLimits& limits = {});

struct FlipReport {
  Permutation perm;
  std::vector<int> flipped;  // indices into the pairs list, ascending
};

// For every automorphism of g, the set of listed pairs it flips
// (phi(a_i) = b_i). Each pair must be a color class of size 2; a pair not
// fixed setwise by some automorphism signals a construction bug and throws.
std::vector<FlipReport> flip_parity_report(const ColoredGraph& g,
                                           const std::vector<std::pair<int, int>>& pairs,
                                           const GroupLimits& limits = {});

// Checks that p maps g onto h preserving colors, adjacency and multiplicity.
bool verify_bijection(const ColoredGraph& g, const ColoredGraph& h, const Permutation& p);

// 1-based cycle notation, e.g. "(1 2 3)(5 6)"; "()" for the identity.
std::string to_cycles(const Permutation& p);

}  // namespace tin
