#include "pdcost/forts.hpp"

#include <algorithm>

#include "pdcost/propagation.hpp"

namespace pdcost {

bool is_fort(const Graph& g, const VertexSet& f) {
    if (f.empty()) throw std::invalid_argument("fort must be nonempty");
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        if (f.test(x)) continue;
        if (g.neighbors(x).intersection_count(f) == 1) return false;
    }
    return true;
}

VertexSet fort_entrance(const Graph& g, const VertexSet& f) {
    VertexSet entrance = closed_neighborhood(g, f);
    entrance -= f;
    return entrance;
}

std::optional<FortCertificate> fort_complement(const Graph& g, const VertexSet& sensors) {
    VertexSet observed = observed_set(g, sensors);
    VertexSet fort = observed.complement();
    if (fort.empty()) return std::nullopt;
    return FortCertificate{fort, fort_entrance(g, fort)};
}

namespace {

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).empty()) return true;
    return false;
}

// DFS for a fort of size exactly `target`, adding vertices in increasing
// label order. A branch dies when some decided-outside vertex has exactly one
// neighbor in F and no undecided neighbor left to absorb the violation.
struct FortSearch {
    const Graph& g;
    int n;
    int target;
    VertexSet fort;
    VertexSet excluded;

    explicit FortSearch(const Graph& g, int target)
        : g(g), n(g.vertex_count()), target(target), fort(g.vertex_count()),
          excluded(g.vertex_count()) {}

    bool violated() const {
        for (int x = 0; x < n; ++x) {
            if (fort.test(x) || !excluded.test(x)) continue;
            if (g.neighbors(x).intersection_count(fort) != 1) continue;
            VertexSet fixers = g.neighbors(x) - fort;
            fixers -= excluded;
            if (fixers.empty()) return true;
        }
        return false;
    }

    bool run(int next, int chosen) {
        if (chosen == target) return is_fort(g, fort);
        if (n - next < target - chosen) return false;
        if (violated()) return false;
        fort.set(next);
        if (run(next + 1, chosen + 1)) return true;
        fort.reset(next);
        excluded.set(next);
        bool found = run(next + 1, chosen);
        excluded.reset(next);
        return found;
    }
};

}  // namespace

MinFortResult min_fort_number(const Graph& g, int size_cap) {
    if (size_cap < 1) throw std::invalid_argument("size_cap must be >= 1");
    if (has_isolated_vertex(g)) return {1, true};
    if (size_cap < 2) return {1, false};
    if (!twin_pairs(g).empty()) return {2, true};
    if (size_cap < 3) return {2, false};

    int cap = std::min(size_cap, g.vertex_count());
    for (int t = 3; t <= cap; ++t) {
        FortSearch search(g, t);
        if (search.run(0, 0)) return {t, true};
    }
    // V(G) itself is a fort, so a full-size search always terminates exactly.
    return {cap, false};
}

MinFortResult min_fort_number(const Graph& g) {
    return min_fort_number(g, g.vertex_count() <= 24 ? g.vertex_count() : 6);
}

std::vector<std::pair<int, int>> twin_pairs(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (g.neighbors(x) == g.neighbors(y) ||
                g.closed_neighborhood(x) == g.closed_neighborhood(y))
                pairs.emplace_back(x, y);
        }
    }
    return pairs;
}

std::vector<FortCertificate> enumerate_minimal_forts(const Graph& g, std::size_t limit) {
    int n = g.vertex_count();
    if (n > 24)
        throw std::invalid_argument("minimal-fort enumeration is exhaustive; supports n <= 24");

    std::vector<FortCertificate> minimal;
    // Ascending-size sweep: every smaller fort contains a minimal fort that was
    // already kept, so subset-freeness against `minimal` certifies minimality.
    for (int t = 1; t <= n; ++t) {
        uint64_t mask = (t == 64) ? ~0ULL : ((1ULL << t) - 1);
        uint64_t end = (n == 64) ? ~0ULL : (1ULL << n);
        while (mask < end) {
            VertexSet f(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1ULL << v)) f.set(v);
            bool dominated = false;
            for (const auto& kept : minimal) {
                if (kept.fort.is_subset_of(f)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated && is_fort(g, f)) {
                if (minimal.size() >= limit)
                    throw ResourceLimitError("minimal fort count exceeds limit of " +
                                             std::to_string(limit));
                minimal.push_back({f, fort_entrance(g, f)});
            }
            // Gosper's hack: next subset of the same size
            uint64_t c = mask & -mask;
            uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if (r == 0) break;  // wrapped
        }
    }
    return minimal;
}

}  // namespace pdcost
