#include "pdcost/cost.hpp"

#include <algorithm>

#include "pdcost/propagation.hpp"

namespace pdcost {

namespace {

void require_exact(const ObservanceTable& table) {
    if (!table.gamma_p)
        throw std::invalid_argument("observance table does not reach gamma_p");
    for (const auto& r : table.rows)
        if (!r.exact)
            throw std::invalid_argument("observance table has inexact rows; refusing to build "
                                        "envelope from unsound values");
}

void require_nonnegative(const Rational& beta) {
    if (beta.is_negative()) throw std::invalid_argument("beta must be nonnegative");
}

}  // namespace

Rational cost(const Graph& g, const VertexSet& sensors, const Rational& beta) {
    require_nonnegative(beta);
    long unobserved = g.vertex_count() - observed_set(g, sensors).count();
    return Rational(sensors.count()) + beta * Rational(unobserved);
}

Rational cost_at(const ObservanceTable& table, int k, const Rational& beta) {
    require_nonnegative(beta);
    const ObservanceRow& row = table.row(k);
    if (!row.exact) throw std::invalid_argument("cost line needs an exact row");
    return Rational(k) + beta * Rational(table.n - row.max_obs);
}

Rational CostEnvelope::value_at(const Rational& beta) const {
    Rational best = Rational(lines[0].k) + beta * Rational(lines[0].slope);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Rational v = Rational(lines[i].k) + beta * Rational(lines[i].slope);
        if (v < best) best = v;
    }
    return best;
}

std::vector<int> CostEnvelope::best_sizes_at(const Rational& beta) const {
    Rational best = value_at(beta);
    std::vector<int> out;
    for (const CostLine& line : lines)
        if (Rational(line.k) + beta * Rational(line.slope) == best) out.push_back(line.k);
    return out;
}

CostEnvelope envelope(const ObservanceTable& table) {
    require_exact(table);
    CostEnvelope env;
    env.n = table.n;
    env.gamma_p = *table.gamma_p;
    for (int k = 0; k <= env.gamma_p; ++k)
        env.lines.push_back({k, table.n - table.row(k).max_obs});

    // Slopes strictly decrease with k, so the envelope walks increasing sizes.
    // From the current line, the next is the one meeting it at the smallest β;
    // on ties the largest size wins (the others touch only at the point).
    int cur = 0;
    Rational lo = 0;
    while (cur < env.gamma_p) {
        int next = -1;
        Rational next_beta = 0;
        for (int j = cur + 1; j <= env.gamma_p; ++j) {
            Rational beta_ij = Rational(j - cur) /
                               Rational(table.row(j).max_obs - table.row(cur).max_obs);
            if (next < 0 || beta_ij < next_beta ||
                (beta_ij == next_beta && j > next)) {
                next = j;
                next_beta = beta_ij;
            }
        }
        env.segments.push_back({{lo, next_beta}, cur, env.lines[cur]});
        cur = next;
        lo = next_beta;
    }
    env.segments.push_back({{lo, std::nullopt}, env.gamma_p, env.lines[env.gamma_p]});
    return env;
}

UsefulSizeReport useful_sizes(const ObservanceTable& table) {
    require_exact(table);
    int gp = *table.gamma_p;
    auto m = [&](int k) { return table.row(k).max_obs; };

    UsefulSizeReport report;
    for (int i = 0; i <= gp; ++i) {
        // Largest β where some smaller size is still no worse, and smallest β
        // where some larger size becomes no worse. Size i is β-best exactly
        // on [lo, hi]; it is useful iff that interval is non-degenerate.
        std::optional<Rational> lo, hi;
        for (int j = 0; j < i; ++j) {
            Rational b = Rational(i - j) / Rational(m(i) - m(j));
            if (!lo || b > *lo) lo = b;
        }
        for (int j = i + 1; j <= gp; ++j) {
            Rational b = Rational(j - i) / Rational(m(j) - m(i));
            if (!hi || b < *hi) hi = b;
        }

        SizeUsefulness entry{i, false, std::nullopt};
        Rational lo_v = lo ? *lo : Rational(0);
        if (!hi) {  // i = γP
            entry.useful = true;
            entry.interval = BetaInterval{lo_v, std::nullopt};
        } else if (!lo) {  // i = 0
            entry.useful = true;
            entry.interval = BetaInterval{0, *hi};
        } else if (*lo < *hi) {
            entry.useful = true;
            entry.interval = BetaInterval{*lo, *hi};
        } else if (*lo == *hi) {
            entry.interval = BetaInterval{*lo, *hi};  // β-best at a single point
        }
        if (entry.useful) report.useful.push_back(i);
        report.per_size.push_back(std::move(entry));
    }

    // The lemma-based characterization and the envelope walk must agree.
    CostEnvelope env = envelope(table);
    std::vector<int> from_env;
    for (const auto& seg : env.segments) from_env.push_back(seg.size);
    if (from_env != report.useful)
        throw std::logic_error("useful-size characterization disagrees with envelope");
    return report;
}

Rational marginal_cost(const ObservanceTable& table, int k, const Rational& beta) {
    require_nonnegative(beta);
    return Rational(1) - beta * Rational(marginal_obs(table, k));
}

std::strong_ordering step_comparison(const ObservanceTable& table, int k, const Rational& beta) {
    return cost_at(table, k - 1, beta) <=> cost_at(table, k, beta);
}

GammaThreshold gamma_threshold(const MinFortResult& fort_number, int gamma_p, int n) {
    if (fort_number.value < 1) throw std::invalid_argument("fort number bound must be >= 1");
    if (gamma_p < 1 || n < 1) throw std::invalid_argument("need gamma_p >= 1 and n >= 1");
    int f = fort_number.exact ? fort_number.value : fort_number.value + 1;

    Rational b;
    if (f == 1) {
        b = 1;
    } else if (f == 2) {
        b = Rational(1, 2);
    } else {
        // max over 1 ≤ k < γP of k / (3(k−1) + f); empty when γP = 1
        b = 0;
        for (int k = 1; k < gamma_p; ++k) {
            Rational cand = Rational(k) / Rational(3 * (k - 1) + f);
            if (cand > b) b = cand;
        }
    }
    Rational floor = Rational(gamma_p) / Rational(n);
    return {std::max(b, floor), fort_number.exact};
}

}  // namespace pdcost
