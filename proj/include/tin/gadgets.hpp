#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tin/graph.hpp"

namespace tin {

/// Labels for the external pairs and intermediate vertex sets of a
/// generated gadget.
struct PairMap {
  std::map<std::string, std::pair<int, int>> pairs;  // label -> (a, b)
  std::map<std::string, std::vector<int>> sets;      // label -> members

  std::pair<int, int> pair(const std::string& label) const;
};

struct Gadget {
  ColoredGraph graph;
  PairMap labels;
};

// CFI gadget X_k: k colored pairs P1..Pk plus 2^(k-1) intermediates F (the
// even-weight length-k bit strings); intermediate s is adjacent to a_i when
// bit i of s is 0 and to b_i otherwise. Requires k >= 2.
Gadget gen_cfi(int k);

// IMP gadget Y_k: X_k plus a pair P0 wired to P1 and P2 with matched
// polarity (a0-a1, a0-a2, b0-b1, b0-b2). Requires k >= 2.
Gadget gen_imp(int k);

// Separating graph: X3 on (P1, P2, P0) and X_{k+2} on (P1, P2, P3..P_{k+2})
// sharing the input pairs P1, P2; intermediate sets F and F' carry distinct
// colors. Requires k >= 1.
Gadget gen_separator(int k);

/// Monotone Boolean circuit over constants; gate references point backward.
struct Circuit {
  enum class Kind { Const0, Const1, And, Or };
  struct Gate {
    Kind kind;
    int in1 = -1;  // 0-based gate indices for And/Or
    int in2 = -1;
  };
  std::vector<Gate> gates;
  int output = -1;
};

// Line format: `gate <id> CONST0|CONST1`, `gate <id> AND <i> <j>`,
// `gate <id> OR <i> <j>`, `output <id>`; ids positive, strictly increasing.
Circuit parse_circuit(std::string_view text);

bool eval_circuit(const Circuit& c);

// Hardness graph N for the circuit reduction: one pair per gate, AND gates
// replaced by X3, OR gates by two IMP gadgets sharing the output pair, a
// Y_{k+4} assembly plus an X3 into P_m per AND/OR gate, and P_m tied to the
// constant-0 vertices by parallel (multiplicity-2) edges. `per_gate_pm`
// gives each gate assembly its own P_m pair instead of one shared pair.
Gadget gen_hardness(const Circuit& c, int k, bool per_gate_pm = false);

}  // namespace tin
