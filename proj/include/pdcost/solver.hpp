#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pdcost/graph.hpp"

namespace pdcost {

struct SolverOptions {
    int threads = 1;                                  // >1: parallel root expansion
    std::size_t memo_bytes = std::size_t(1024) << 20; // memo store budget
    std::uint64_t node_budget = 0;                    // 0 = unlimited; exceeded → ResourceLimitError
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t closures = 0;
    std::size_t memo_entries = 0;
    bool memo_saturated = false;
    double seconds = 0;
};

struct ObservanceRow {
    int k;
    int max_obs;
    std::vector<int> witness;  // sorted; lexicographically smallest optimum over candidates
    bool exact;
};

// maxObs rows for k = 0..last. Values are exact (the solver throws rather than
// report an uncertified value). Strictly increasing up to gamma_p.
struct ObservanceTable {
    int n = 0;
    std::vector<ObservanceRow> rows;
    std::optional<int> gamma_p;  // smallest k with maxObs = n, when reached
    SolveStats stats;

    const ObservanceRow& row(int k) const;
    bool exact_through_gamma_p() const;
};

// Exact maxObs(G;k) with a witness, via depth-first search over closed
// observed-set states B with transitions B → C(B ∪ N[v]); memoized on
// (B, remaining budget) with subset-dominance pruning.
std::pair<int, std::vector<int>> max_obs(const Graph& g, int k, const SolverOptions& opt = {});

// Rows 0..min(k_max, gamma_p), one shared memo store across budgets.
ObservanceTable observance_table(const Graph& g, int k_max, const SolverOptions& opt = {});

int power_domination_number(const Graph& g, const SolverOptions& opt = {});

// maxObs(G;k) − maxObs(G;k−1); requires both rows present and exact.
int marginal_obs(const ObservanceTable& table, int k);

// Iteratively adds the vertex maximizing closure gain (ties: smallest label).
// Lower bound on maxObs; not exact.
std::pair<int, std::vector<int>> greedy_observance(const Graph& g, int k);

}  // namespace pdcost
