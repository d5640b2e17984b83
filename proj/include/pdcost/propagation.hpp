#pragma once

#include <vector>

#include "pdcost/graph.hpp"

namespace pdcost {

struct Force {
    int forcer;
    int forced;
    friend bool operator==(const Force&, const Force&) = default;
};

// One run of a forcing closure. `forces` is a valid chronology: replaying it
// in order, each forcer has exactly one unobserved neighbor at its turn, and
// it is the forced vertex.
struct PropagationTrace {
    VertexSet initial;
    VertexSet final;
    std::vector<Force> forces;
};

// Zero forcing closure C_G(T): a vertex x *in the current set* with exactly
// one neighbor outside it forces that neighbor. Deterministic chronology:
// synchronous rounds, eligible forcers processed in increasing label, each
// target forced once per round by its smallest forcer.
PropagationTrace zero_forcing_closure(const Graph& g, const VertexSet& start);

// Star closure C*_G(T): same rule, but *any* vertex of G may force, whether
// or not it is in the set.
VertexSet star_closure(const Graph& g, const VertexSet& start);

// Obs(G;S) = C_G(N[S]): domination step then zero forcing closure.
PropagationTrace observe(const Graph& g, const VertexSet& sensors);

// Closure final set only, via an unordered worklist (same fixed point as the
// round-based closure; closures are order-independent). This is the kernel
// the solver uses.
VertexSet zero_forcing_closure_set(const Graph& g, const VertexSet& start);
VertexSet observed_set(const Graph& g, const VertexSet& sensors);

bool is_power_dominating_set(const Graph& g, const VertexSet& sensors);

// Replays the chronology against the graph; false if any step is not a legal
// force or the end state differs from `final`.
bool trace_replays_validly(const Graph& g, const PropagationTrace& trace);

}  // namespace pdcost
