#pragma once

#include <cstdint>
#include <vector>

#include "pdcost/graph.hpp"
#include "pdcost/rational.hpp"

namespace pdcost {

// Parameters of a ⊞-gadget: `affix_count` affix vertices on a P_ℓ □ C_{2m}
// cylindrical grid with leaf layers L1/L2 on the first two columns and a
// subdivision layer L3 between L2 and the affix vertices.
struct GadgetSpec {
    int affix_count;  // a ≥ 1
    int path_len;     // ℓ ≥ 1
    int cycle_len;    // 2m, even and ≥ 4

    void validate() const;
};

struct GadgetGraph {
    Graph graph;
    GadgetSpec spec;
    VertexSet grid, l1, l2, l3, affix;

    // Grid vertex ids are row-major: row ∈ [0,ℓ), col ∈ [0,2m).
    int grid_vertex(int row, int col) const { return row * spec.cycle_len + col; }
    std::vector<int> affix_vertices() const { return affix.to_vector(); }
};

GadgetGraph build_gadget(const GadgetSpec& spec, long long vertex_cap = kDefaultVertexCap);

// Result of identifying the gadget's affix vertices with a host set A, in
// sorted-label order (x_1 ↔ smallest of A). Host vertices keep their ids;
// gadget layers are appended after them.
struct AffixedGraph {
    Graph graph;
    GadgetSpec spec;
    VertexSet host;    // the original host vertices (including the attach set)
    VertexSet attach;  // image of A
    VertexSet grid, l1, l2, l3;

    VertexSet gadget_vertices() const { return grid | l1 | l2 | l3; }
};

AffixedGraph affix(const Graph& host, const VertexSet& a, const GadgetGraph& gadget,
                   long long vertex_cap = kDefaultVertexCap);

// One gadget inside a realized graph.
struct RealizedGadget {
    int size_index;  // the i with A_i as its attach set
    long long x;     // cycle length of its grid
    VertexSet grid, l1, l2, l3;
};

struct RealizedGraph {
    Graph graph;
    int s;
    std::vector<int> sizes;             // R, sorted
    std::vector<long long> x;           // x[i-1] = x_i for i = 1..s (0 outside R)
    std::vector<std::vector<int>> a_sets;  // a_sets[i-1] = A_i (first i clique labels)
    VertexSet clique;                   // K
    std::vector<RealizedGadget> gadgets;
    long long vertex_bound;             // 33s³ + (4s+1)·Σ x_i
};

// The realizability construction: K_s with s+1 leaves per clique vertex, one
// ⊞^i_{4s+1, x_i}-gadget affixed at A_i for each i ∈ R\{0}, with x_i from the
// descending recurrence x_i = 2⌈(63s⁴ + (4s²+s)·Σ_{t>i} x_t)/(4s+1)⌉.
// Exact integer arithmetic throughout; throws CapExceededError naming the
// required vertex count when the cap is too small.
RealizedGraph realize_useful_sizes(int s, const std::vector<int>& r_sizes,
                                   long long vertex_cap = kDefaultVertexCap);

struct BoundedObservanceReport {
    long long bound;          // 2ℓ(|A| + 3s + 2)
    int worst_outside;        // max |Obs ∩ gadget| over tested S with A ⊄ S
    bool bound_violated;
    bool full_when_a_ok;      // S ⊇ A observed the entire gadget every time
    bool exhaustive;
    long long sets_tested;
    Rational worst_ratio;     // worst_outside / bound
};

// Checks the gadget observance bound on an affixed graph: every size-s set S
// with A ⊄ S observes at most 2ℓ(|A|+3s+2) gadget vertices, and any S ⊇ A
// observes the whole gadget. Exhaustive when C(n,s) ≤ max_sets, else sampled.
BoundedObservanceReport verify_bounded_observance(const AffixedGraph& g, int s,
                                                  long long max_sets = 2000000,
                                                  std::uint64_t seed = 0x5eed);

}  // namespace pdcost
