#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "pdcost/forts.hpp"
#include "pdcost/rational.hpp"
#include "pdcost/solver.hpp"

namespace pdcost {

// Cost of budget k as a line in β: C(G;k,β) = k + slope·β, slope = n − maxObs(G;k).
struct CostLine {
    int k;
    int slope;
};

// Closed β-interval [lo, hi]; hi = nullopt means +∞.
struct BetaInterval {
    Rational lo;
    std::optional<Rational> hi;
};

struct EnvelopeSegment {
    BetaInterval interval;
    int size;  // the β-best budget on this interval
    CostLine line;
};

// Exact lower envelope of the cost lines over β ∈ [0,∞). Segments tile the
// ray and share endpoints; at a shared endpoint both adjacent sizes attain
// the minimum. Sizes are nondecreasing and slopes decreasing along the ray.
struct CostEnvelope {
    int n = 0;
    int gamma_p = 0;
    std::vector<CostLine> lines;  // k = 0..γP
    std::vector<EnvelopeSegment> segments;

    Rational value_at(const Rational& beta) const;        // min over all lines
    std::vector<int> best_sizes_at(const Rational& beta) const;
};

struct SizeUsefulness {
    int size;
    bool useful;
    // β-best range: a closed interval for useful sizes, a degenerate point
    // when the size ties the envelope at exactly one β, nullopt when never best.
    std::optional<BetaInterval> interval;
};

struct UsefulSizeReport {
    std::vector<int> useful;                // sorted; always contains 0 and γP
    std::vector<SizeUsefulness> per_size;   // k = 0..γP
};

// C(G;S,β) = |S| + β·(n − |Obs(G;S)|), exact. Rejects β < 0.
Rational cost(const Graph& g, const VertexSet& sensors, const Rational& beta);

// Cost line of row k evaluated at β.
Rational cost_at(const ObservanceTable& table, int k, const Rational& beta);

// Both require the table exact through γP and refuse to run otherwise.
CostEnvelope envelope(const ObservanceTable& table);
UsefulSizeReport useful_sizes(const ObservanceTable& table);

// MC(G;k,β) = 1 − β·MObs(G;k); satisfies C(G;k,β) − C(G;k−1,β) = MC(G;k,β).
Rational marginal_cost(const ObservanceTable& table, int k, const Rational& beta);

// Ordering of C(G;k−1,β) versus C(G;k,β).
std::strong_ordering step_comparison(const ObservanceTable& table, int k, const Rational& beta);

// Smallest certified β beyond which any minimum power dominating set is
// β-best: max{B, γP/n} with B = 1, 1/2, or the f ≥ 3 expression. When the
// fort number is only bounded below the threshold is computed at the bound;
// B is nonincreasing in f, so the result is still valid, just conservative.
struct GammaThreshold {
    Rational threshold;
    bool exact;
};

GammaThreshold gamma_threshold(const MinFortResult& fort_number, int gamma_p, int n);

}  // namespace pdcost
