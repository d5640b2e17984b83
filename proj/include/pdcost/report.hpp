#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "pdcost/cost.hpp"

namespace pdcost {

struct AnalysisOptions {
    int k_max = -1;  // -1: run the table to γP
    SolverOptions solver;
    std::optional<Rational> beta;  // point query: report the β-best size(s)
    int fort_size_cap = -1;        // -1: default cap policy
};

struct BetaQueryResult {
    Rational beta;
    std::vector<int> best_sizes;  // all budgets attaining the minimum cost
    Rational min_cost;
    std::vector<int> witness;  // witness for the smallest best size
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    int components = 0;
    ObservanceTable table;
    CostEnvelope env;
    UsefulSizeReport useful;
    MinFortResult fort{0, false};
    GammaThreshold threshold{Rational(0), false};
    std::optional<BetaQueryResult> beta_query;
    double seconds = 0;
};

AnalysisReport analyze(const Graph& g, const AnalysisOptions& opt = {});

// Pinned schema: {"n":60,"rows":[{"k":4,"maxObs":35,"witness":[30,36,51,55],
// "exact":true}],"gammaP":11}
nlohmann::json table_to_json(const ObservanceTable& table);
ObservanceTable table_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AnalysisReport& report);
std::string report_to_csv(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

// β samples with one cost column per budget plus the envelope column.
// Rationals are evaluated exactly and printed as decimals for plotting.
std::string plot_data_csv(const CostEnvelope& env, int samples = 100,
                          const Rational& beta_max = Rational(1));

}  // namespace pdcost
