#include "pdcost/propagation.hpp"

namespace pdcost {

PropagationTrace zero_forcing_closure(const Graph& g, const VertexSet& start) {
    PropagationTrace trace{start, start, {}};
    VertexSet& cur = trace.final;
    int n = g.vertex_count();

    for (;;) {
        // Snapshot eligibility against the round-start set; each round target
        // is recorded once, by its smallest forcer.
        VertexSet round_targets(n);
        bool any = false;
        cur.for_each([&](int x) {
            VertexSet unobserved = g.neighbors(x) - cur;
            if (unobserved.count() != 1) return;
            int y = unobserved.first();
            if (round_targets.test(y)) return;
            round_targets.set(y);
            trace.forces.push_back({x, y});
            any = true;
        });
        if (!any) break;
        cur |= round_targets;
    }
    return trace;
}

VertexSet star_closure(const Graph& g, const VertexSet& start) {
    VertexSet cur = start;
    int n = g.vertex_count();
    for (;;) {
        VertexSet round_targets(n);
        bool any = false;
        for (int x = 0; x < n; ++x) {
            VertexSet unobserved = g.neighbors(x) - cur;
            if (unobserved.count() != 1) continue;
            int y = unobserved.first();
            if (!round_targets.test(y)) {
                round_targets.set(y);
                any = true;
            }
        }
        if (!any) break;
        cur |= round_targets;
    }
    return cur;
}

VertexSet zero_forcing_closure_set(const Graph& g, const VertexSet& start) {
    VertexSet cur = start;
    int n = g.vertex_count();
    VertexSet pending = start;
    std::vector<int> work = start.to_vector();

    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        pending.reset(x);
        VertexSet unobserved = g.neighbors(x) - cur;
        if (unobserved.count() != 1) continue;
        int y = unobserved.first();
        cur.set(y);
        // y and its observed neighbors may now be able to force
        VertexSet touched = g.neighbors(y) & cur;
        touched.set(y);
        touched.for_each([&](int t) {
            if (!pending.test(t)) {
                pending.set(t);
                work.push_back(t);
            }
        });
    }
    return cur;
}

PropagationTrace observe(const Graph& g, const VertexSet& sensors) {
    return zero_forcing_closure(g, closed_neighborhood(g, sensors));
}

VertexSet observed_set(const Graph& g, const VertexSet& sensors) {
    return zero_forcing_closure_set(g, closed_neighborhood(g, sensors));
}

bool is_power_dominating_set(const Graph& g, const VertexSet& sensors) {
    return observed_set(g, sensors) == VertexSet::full(g.vertex_count());
}

bool trace_replays_validly(const Graph& g, const PropagationTrace& trace) {
    VertexSet cur = trace.initial;
    for (const Force& f : trace.forces) {
        if (f.forcer < 0 || f.forcer >= g.vertex_count()) return false;
        if (!cur.test(f.forcer)) return false;
        VertexSet unobserved = g.neighbors(f.forcer) - cur;
        if (unobserved.count() != 1 || unobserved.first() != f.forced) return false;
        cur.set(f.forced);
    }
    return cur == trace.final;
}

}  // namespace pdcost
