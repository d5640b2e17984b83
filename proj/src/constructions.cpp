#include "pdcost/constructions.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "pdcost/propagation.hpp"

namespace pdcost {

void GadgetSpec::validate() const {
    if (affix_count < 1) throw std::invalid_argument("gadget needs affix_count >= 1");
    if (path_len < 1) throw std::invalid_argument("gadget needs path_len >= 1");
    if (cycle_len < 4 || cycle_len % 2 != 0)
        throw std::invalid_argument("gadget cycle length must be even and >= 4");
}

GadgetGraph build_gadget(const GadgetSpec& spec, long long vertex_cap) {
    spec.validate();
    int a = spec.affix_count, ell = spec.path_len, two_m = spec.cycle_len;

    long long total = (long long)two_m * ell + 4LL * ell + 2LL * a * ell + a;
    if (total > vertex_cap)
        throw CapExceededError("gadget exceeds vertex cap", std::to_string(total));
    int n = int(total);

    int grid_base = 0;
    int l1_base = two_m * ell;
    int l2_base = l1_base + 2 * ell;
    int l3_base = l2_base + 2 * ell;
    int affix_base = l3_base + 2 * a * ell;

    std::vector<std::pair<int, int>> edges;
    auto grid_id = [&](int row, int col) { return grid_base + row * two_m + col; };

    for (int t = 0; t < ell; ++t) {
        for (int c = 0; c < two_m; ++c) {
            if (t + 1 < ell) edges.emplace_back(grid_id(t, c), grid_id(t + 1, c));
            edges.emplace_back(grid_id(t, c), grid_id(t, (c + 1) % two_m));
        }
    }
    // L1 leaves hang off the first two columns; L2 leaves hang off L1.
    for (int t = 0; t < ell; ++t) {
        for (int j = 0; j < 2; ++j) {
            int q = 2 * t + j;
            edges.emplace_back(grid_id(t, j), l1_base + q);
            edges.emplace_back(l1_base + q, l2_base + q);
        }
    }
    // Each (L2 vertex, affix vertex) pair gets a degree-2 subdivision vertex.
    for (int q = 0; q < 2 * ell; ++q) {
        for (int i = 0; i < a; ++i) {
            int w = l3_base + q * a + i;
            edges.emplace_back(l2_base + q, w);
            edges.emplace_back(w, affix_base + i);
        }
    }

    GadgetGraph gg{Graph::from_edges(n, edges), spec,
                   VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < l1_base; ++v) gg.grid.set(v);
    for (int v = l1_base; v < l2_base; ++v) gg.l1.set(v);
    for (int v = l2_base; v < l3_base; ++v) gg.l2.set(v);
    for (int v = l3_base; v < affix_base; ++v) gg.l3.set(v);
    for (int v = affix_base; v < n; ++v) gg.affix.set(v);
    return gg;
}

namespace {

VertexSet lift(const VertexSet& s, int new_universe) {
    VertexSet out(new_universe);
    s.for_each([&](int v) { out.set(v); });
    return out;
}

}  // namespace

AffixedGraph affix(const Graph& host, const VertexSet& a, const GadgetGraph& gadget,
                   long long vertex_cap) {
    if (a.count() != gadget.spec.affix_count)
        throw std::invalid_argument("attach set size must equal the gadget affix count");
    int n0 = host.vertex_count();
    int ng = gadget.graph.vertex_count();
    int na = gadget.spec.affix_count;
    long long total = n0 + (long long)(ng - na);
    if (total > vertex_cap)
        throw CapExceededError("affixed graph exceeds vertex cap", std::to_string(total));
    int n = int(total);

    // Gadget layout puts affix vertices last, so non-affix gadget ids map
    // contiguously after the host; affix x_i maps to the i-th smallest of A.
    std::vector<int> attach = a.to_vector();
    int affix_base = ng - na;
    auto map_id = [&](int gid) {
        return gid < affix_base ? n0 + gid : attach[gid - affix_base];
    };

    std::vector<std::pair<int, int>> edges = host.edges();
    for (auto [u, v] : gadget.graph.edges()) edges.emplace_back(map_id(u), map_id(v));

    AffixedGraph out{Graph::from_edges(n, edges), gadget.spec,
                     VertexSet(n), lift(a, n),
                     VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n0; ++v) out.host.set(v);
    gadget.grid.for_each([&](int v) { out.grid.set(n0 + v); });
    gadget.l1.for_each([&](int v) { out.l1.set(n0 + v); });
    gadget.l2.for_each([&](int v) { out.l2.set(n0 + v); });
    gadget.l3.for_each([&](int v) { out.l3.set(n0 + v); });
    return out;
}

RealizedGraph realize_useful_sizes(int s, const std::vector<int>& r_sizes,
                                   long long vertex_cap) {
    if (s < 1) throw std::invalid_argument("realize needs s >= 1");
    std::vector<int> r = r_sizes;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    if (r.empty() || r.front() != 0 || r.back() != s)
        throw std::invalid_argument("R must contain 0 and s");
    for (int v : r)
        if (v < 0 || v > s) throw std::invalid_argument("R must be a subset of {0..s}");

    int ell = 4 * s + 1;
    mpz_class s4 = mpz_class(s) * s * s * s;

    // x_i depends only on x_t for t > i, so fill descending.
    std::vector<mpz_class> x(s + 1, 0);
    mpz_class tail = 0;  // Σ_{t>i} x_t
    for (int i = s; i >= 1; --i) {
        if (std::find(r.begin(), r.end(), i) != r.end()) {
            mpz_class num = 63 * s4 + mpz_class(4 * s * s + s) * tail;
            mpz_class q;
            mpz_cdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 4 * s + 1);
            x[i] = 2 * q;
        }
        tail += x[i];
    }

    mpz_class n0 = mpz_class(s) + mpz_class(s) * (s + 1);
    mpz_class total = n0;
    for (int i = 1; i <= s; ++i)
        if (x[i] > 0) total += 4 * ell + 2LL * i * ell + ell * x[i];
    if (total > vertex_cap)
        throw CapExceededError("realized graph exceeds vertex cap", total.get_str());

    // G0: clique K_s, then s+1 leaves per clique vertex.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    int next_id = s;
    for (int c = 0; c < s; ++c)
        for (int leaf = 0; leaf <= s; ++leaf) edges.emplace_back(c, next_id++);
    Graph g = Graph::from_edges(next_id, edges);

    RealizedGraph out;
    out.s = s;
    out.sizes = r;
    out.x.assign(s, 0);
    out.a_sets.resize(s);
    for (int i = 1; i <= s; ++i) {
        out.x[i - 1] = x[i].get_si();
        for (int v = 0; v < i; ++v) out.a_sets[i - 1].push_back(v);
    }

    for (int i = 1; i <= s; ++i) {
        if (x[i] == 0) continue;
        GadgetSpec spec{i, ell, int(x[i].get_si())};
        GadgetGraph gadget = build_gadget(spec, vertex_cap);
        VertexSet a(g.vertex_count());
        for (int v = 0; v < i; ++v) a.set(v);
        AffixedGraph af = affix(g, a, gadget, vertex_cap);
        g = af.graph;
        out.gadgets.push_back({i, out.x[i - 1], af.grid, af.l1, af.l2, af.l3});
    }

    int n = g.vertex_count();
    out.graph = std::move(g);
    out.clique = VertexSet(n);
    for (int v = 0; v < s; ++v) out.clique.set(v);
    for (auto& gad : out.gadgets) {
        gad.grid = lift(gad.grid, n);
        gad.l1 = lift(gad.l1, n);
        gad.l2 = lift(gad.l2, n);
        gad.l3 = lift(gad.l3, n);
    }

    mpz_class bound = 33 * mpz_class(s) * s * s + mpz_class(4 * s + 1) * tail;
    out.vertex_bound = bound.get_si();
    if (n > out.vertex_bound) throw std::logic_error("realized graph exceeds its size bound");
    return out;
}

BoundedObservanceReport verify_bounded_observance(const AffixedGraph& g, int s,
                                                  long long max_sets, std::uint64_t seed) {
    int n = g.graph.vertex_count();
    int ell = g.spec.path_len;
    int m_half = g.spec.cycle_len / 2;
    int a_size = g.attach.count();
    if (s < 1 || n < s) throw std::invalid_argument("need 1 <= s <= n");
    if (!(ell > 4 * s) || !(m_half >= ell))
        throw std::invalid_argument("lemma preconditions need m >= l > 4s");
    // Every attach vertex needs at least s+1 pendant host neighbors.
    bool ok = true;
    g.attach.for_each([&](int v) {
        int leaves = 0;
        g.graph.neighbors(v).for_each([&](int w) {
            if (g.host.test(w) && g.graph.degree(w) == 1) ++leaves;
        });
        if (leaves < s + 1) ok = false;
    });
    if (!ok)
        throw std::invalid_argument("every attach vertex needs >= s+1 pendant host neighbors");

    VertexSet gadget_all = g.gadget_vertices();
    int gadget_count = gadget_all.count();

    BoundedObservanceReport report{};
    report.bound = 2LL * ell * (a_size + 3 * s + 2);
    report.full_when_a_ok = true;

    auto run_one = [&](const VertexSet& sensors) {
        ++report.sets_tested;
        VertexSet obs = observed_set(g.graph, sensors);
        if (g.attach.is_subset_of(sensors)) {
            if ((obs & gadget_all).count() != gadget_count) report.full_when_a_ok = false;
        } else {
            int outside = (obs & gadget_all).count();
            if (outside > report.worst_outside) report.worst_outside = outside;
            if (outside > report.bound) report.bound_violated = true;
        }
    };

    // count C(n,s), saturating
    long long combos = 1;
    for (int i = 0; i < s; ++i) {
        combos = combos * (n - i) / (i + 1);
        if (combos > max_sets) break;
    }

    if (combos <= max_sets) {
        report.exhaustive = true;
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            VertexSet sensors(n);
            for (int v : idx) sensors.set(v);
            run_one(sensors);
            int pos = s - 1;
            while (pos >= 0 && idx[pos] == n - s + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    } else {
        report.exhaustive = false;
        // always include one A-containing placement when it fits
        if (a_size <= s) {
            VertexSet sensors = g.attach;
            int v = 0;
            while (sensors.count() < s) {
                if (!sensors.test(v)) sensors.set(v);
                ++v;
            }
            run_one(sensors);
        }
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (long long t = report.sets_tested; t < max_sets; ++t) {
            VertexSet sensors(n);
            while (sensors.count() < s) sensors.set(pick(rng));
            run_one(sensors);
        }
    }

    report.worst_ratio = Rational(report.worst_outside) / Rational(report.bound);
    return report;
}

}  // namespace pdcost
