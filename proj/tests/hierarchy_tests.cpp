#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tin/gadgets.hpp"
#include "tin/hierarchy.hpp"

using namespace tin;

namespace {

// A negative verdict must come with a replayable witness: individualizing
// the two recorded sequences in two copies yields non-isomorphic colored
// graphs.
void check_witness(const ColoredGraph& g, const HierarchyVerdict& v) {
  REQUIRE_FALSE(v.member);
  REQUIRE(v.witness.has_value());
  const auto& [sg, sh] = *v.witness;
  CHECK(sg.size() <= static_cast<std::size_t>(v.k));
  CHECK(sg.size() == sh.size());
  auto cg = support::colored(g, refine_seq(g, sg));
  auto ch = support::colored(g, refine_seq(g, sh));
  CHECK_FALSE(exact_iso(cg, ch).has_value());
}

}  // namespace

TEST_CASE("level 0 is vacuous") {
  CHECK(is_k_tinhofer_operational(builtin("frucht", {}), 0).member);
  CHECK(is_k_tinhofer_algebraic(builtin("frucht", {}), 0).member);
}

TEST_CASE("frucht graph fails at level 1") {
  auto fr = builtin("frucht", {});
  auto v = is_k_tinhofer_operational(fr, 1);
  check_witness(fr, v);
  CHECK_FALSE(is_k_tinhofer_algebraic(fr, 1).member);
  CHECK(tinhofer_threshold(fr) == 0);
}

TEST_CASE("cycles pass every level") {
  auto c6 = builtin("cycle", {6});
  CHECK(tinhofer_threshold(c6) == 6);
  for (int k = 0; k <= 6; ++k) {
    CHECK(is_k_tinhofer_operational(c6, k).member);
    CHECK(is_k_tinhofer_algebraic(c6, k).member);
  }
}

TEST_CASE("separating graph: passes level 1, fails level 2") {
  auto s = gen_separator(1).graph;
  CHECK(is_k_tinhofer_operational(s, 1).member);
  CHECK(is_k_tinhofer_algebraic(s, 1).member);

  auto v = is_k_tinhofer_operational(s, 2);
  check_witness(s, v);
  CHECK_FALSE(is_k_tinhofer_algebraic(s, 2).member);
  auto va = is_k_tinhofer_algebraic(s, 2);
  check_witness(s, va);
  CHECK(tinhofer_threshold(s) == 1);
}

TEST_CASE("operational and algebraic checkers agree on random colored graphs") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 40; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = support::random_graph(rng, n, 2);
    for (int k = 0; k <= n; ++k) {
      auto op = is_k_tinhofer_operational(g, k);
      auto alg = is_k_tinhofer_algebraic(g, k);
      CHECK(op.member == alg.member);
      if (!op.member) {
        check_witness(g, op);
        check_witness(g, alg);
      }
    }
  }
}

TEST_CASE("membership is downward closed and collapses at n-1") {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 25; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = support::random_graph(rng, n, 1);
    int t = tinhofer_threshold(g);
    for (int k = 0; k <= n; ++k) {
      CHECK(is_k_tinhofer_operational(g, k).member == (k <= t));
    }
    CHECK(is_k_tinhofer_operational(g, n - 1).member ==
          is_k_tinhofer_operational(g, n).member);
  }
}

TEST_CASE("level 1 is exactly refinability") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    auto g = support::random_graph(rng, 2 + static_cast<int>(rng() % 6), 1);
    CHECK(is_k_tinhofer_operational(g, 1).member == is_refinable(g));
  }
  CHECK_FALSE(is_k_tinhofer_operational(builtin("frucht", {}), 1).member);
  CHECK(is_k_tinhofer_operational(builtin("cycle", {6}), 1).member);
}

TEST_CASE("tree cross-check never rejects a member") {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 20; ++i) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto g = support::random_graph(rng, n, 1);
    for (int k = 1; k <= 3; ++k) {
      if (is_k_tinhofer_operational(g, k).member) {
        CHECK(is_k_tinhofer_irtree(g, k, SelectorRule::MinColor).member);
      }
    }
  }
  // One-sided: a graph that fails level 2 can still pass the tree check,
  // because the trees only explore one selected cell per node.
  auto s = gen_separator(1).graph;
  CHECK(is_k_tinhofer_irtree(s, 1, SelectorRule::MinColor).member);
  CHECK(is_k_tinhofer_irtree(s, 2, SelectorRule::MinColor).member);
}

TEST_CASE("orbit pruning does not change verdicts") {
  std::mt19937_64 rng(55);
  HierarchyOptions pruned;
  pruned.orbit_prune = true;
  for (int i = 0; i < 20; ++i) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = support::random_graph(rng, n, 1);
    for (int k = 0; k <= n; ++k) {
      CHECK(is_k_tinhofer_operational(g, k, pruned).member ==
            is_k_tinhofer_operational(g, k).member);
    }
  }
  auto s = gen_separator(1).graph;
  CHECK(tinhofer_threshold(s, pruned) == 1);
}

TEST_CASE("classify: discrete graph") {
  ColoredGraph g(3);
  for (int v = 0; v < 3; ++v) g.set_color(v, v);
  g.add_edge(0, 1);
  auto rep = classify(g);
  CHECK(rep.discrete);
  CHECK(rep.refinable);
  CHECK(rep.threshold == 3);
  CHECK(rep.tinhofer);
  CHECK_FALSE(rep.deficiency.has_value());
}

TEST_CASE("classify: hexagon") {
  auto rep = classify(builtin("cycle", {6}));
  CHECK_FALSE(rep.discrete);
  CHECK(rep.refinable);
  CHECK(rep.threshold == 6);
  CHECK(rep.tinhofer);
  CHECK_FALSE(rep.deficiency.has_value());
}

TEST_CASE("classify: frucht graph") {
  auto rep = classify(builtin("frucht", {}));
  CHECK_FALSE(rep.discrete);
  CHECK_FALSE(rep.refinable);
  CHECK(rep.threshold == 0);
  CHECK_FALSE(rep.tinhofer);
  REQUIRE(rep.deficiency.has_value());
  CHECK(*rep.deficiency == 11);
}

TEST_CASE("classify: separating graph") {
  auto rep = classify(gen_separator(1).graph);
  CHECK_FALSE(rep.discrete);
  CHECK(rep.refinable);
  CHECK(rep.threshold == 1);
  CHECK_FALSE(rep.tinhofer);
  REQUIRE(rep.deficiency.has_value());
  CHECK(*rep.deficiency == 14);
}

TEST_CASE("node cap aborts the search") {
  HierarchyOptions tiny;
  tiny.node_cap = 3;
  CHECK_THROWS_AS(is_k_tinhofer_operational(builtin("cycle", {6}), 3, tiny), Error);
}
