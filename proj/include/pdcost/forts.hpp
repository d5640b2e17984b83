#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pdcost/graph.hpp"

namespace pdcost {

// A verified fort with its entrance: no vertex outside `fort` has exactly one
// neighbor inside it; `entrance` is the set of outside vertices with at least
// one neighbor inside.
struct FortCertificate {
    VertexSet fort;
    VertexSet entrance;
};

bool is_fort(const Graph& g, const VertexSet& f);

VertexSet fort_entrance(const Graph& g, const VertexSet& f);

// V(G)\Obs(G;S) is a fort whenever S is not a power dominating set; returns
// its certificate, or nullopt when S power-dominates.
std::optional<FortCertificate> fort_complement(const Graph& g, const VertexSet& sensors);

// Result of the minimum-fort search. exact → the minimum fort size equals
// `value`; otherwise every fort has size > value (= the cap searched to).
struct MinFortResult {
    int value;
    bool exact;
};

// f(G): 1 iff an isolated vertex exists, 2 iff no isolated vertex but a twin
// pair exists, otherwise exact search of increasing sizes up to size_cap.
// Pass size_cap = n for a full search (V(G) is always a fort, so f(G) ≤ n).
MinFortResult min_fort_number(const Graph& g, int size_cap);
MinFortResult min_fort_number(const Graph& g);  // default cap: n for n ≤ 24, else 6

// Unordered pairs {x,y} with N(x)=N(y) or N[x]=N[y].
std::vector<std::pair<int, int>> twin_pairs(const Graph& g);

// All inclusion-minimal forts, by exhaustive subset search (intended for
// n ≤ ~20). Throws ResourceLimitError if more than `limit` minimal forts.
std::vector<FortCertificate> enumerate_minimal_forts(const Graph& g, std::size_t limit = 1000000);

}  // namespace pdcost
