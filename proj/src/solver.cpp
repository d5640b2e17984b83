#include "pdcost/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <mutex>
#include <thread>

#include "pdcost/propagation.hpp"

namespace pdcost {

namespace {

template <int W>
struct Mask {
    std::array<uint64_t, W> w{};

    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1ULL; }
    void set(int v) { w[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(1ULL << (v & 63)); }

    int popcount() const {
        int c = 0;
        for (int i = 0; i < W; ++i) c += std::popcount(w[i]);
        return c;
    }

    bool subset_of(const Mask& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }

    bool none() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return false;
        return true;
    }

    Mask& operator|=(const Mask& o) {
        for (int i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }

    Mask andnot(const Mask& o) const {
        Mask r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }

    Mask operator&(const Mask& o) const {
        Mask r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }

    int first() const {
        for (int i = 0; i < W; ++i)
            if (w[i]) return (i << 6) + std::countr_zero(w[i]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (int i = 0; i < W; ++i) {
            uint64_t x = w[i];
            while (x) {
                f((i << 6) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    friend bool operator==(const Mask&, const Mask&) = default;
};

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

template <int W>
uint64_t mask_hash(const Mask<W>& m, int r) {
    uint64_t h = mix64(uint64_t(r) + 0x51afd7ed558ccd00ULL);
    for (int i = 0; i < W; ++i) h = mix64(h ^ m.w[i]);
    return h;
}

// Open-addressed (state, remaining) → exact value store, sharded for
// concurrent access. Stops accepting inserts once the byte budget is reached;
// the search stays exact, it just re-derives evicted states.
template <int W>
class Memo {
public:
    struct Entry {
        Mask<W> key;
        int16_t r = -1;  // -1 marks an empty slot
        int16_t val = 0;
    };

    Memo(std::size_t byte_budget, bool locking) : locking_(locking) {
        std::size_t per_shard = byte_budget / kShards;
        for (auto& s : shards_) {
            s.max_slots = std::max<std::size_t>(1024, per_shard / sizeof(Entry));
            // power of two
            s.max_slots = std::size_t(1) << (63 - std::countl_zero<uint64_t>(s.max_slots));
            s.slots.resize(std::min<std::size_t>(1024, s.max_slots));
        }
    }

    std::optional<int> find(const Mask<W>& key, int r) {
        uint64_t h = mask_hash(key, r);
        Shard& s = shards_[h % kShards];
        auto lk = maybe_lock(s);
        std::size_t m = s.slots.size() - 1;
        for (std::size_t i = (h >> 8) & m;; i = (i + 1) & m) {
            const Entry& e = s.slots[i];
            if (e.r < 0) return std::nullopt;
            if (e.r == r && e.key == key) return int(e.val);
        }
    }

    void insert(const Mask<W>& key, int r, int val) {
        uint64_t h = mask_hash(key, r);
        Shard& s = shards_[h % kShards];
        auto lk = maybe_lock(s);
        if (s.count + 1 > s.slots.size() - s.slots.size() / 8) {
            if (s.slots.size() * 2 <= s.max_slots)
                grow(s);
            else if (s.count + 1 > s.slots.size() - s.slots.size() / 16) {
                saturated_.store(true, std::memory_order_relaxed);
                return;  // keep a safety margin of free slots for probing
            }
        }
        std::size_t m = s.slots.size() - 1;
        for (std::size_t i = (h >> 8) & m;; i = (i + 1) & m) {
            Entry& e = s.slots[i];
            if (e.r < 0) {
                e = {key, int16_t(r), int16_t(val)};
                ++s.count;
                return;
            }
            if (e.r == r && e.key == key) return;
        }
    }

    std::size_t entries() const {
        std::size_t total = 0;
        for (const auto& s : shards_) total += s.count;
        return total;
    }

    bool saturated() const { return saturated_.load(std::memory_order_relaxed); }

private:
    static constexpr int kShards = 64;

    struct Shard {
        std::mutex mu;
        std::vector<Entry> slots;
        std::size_t count = 0;
        std::size_t max_slots = 0;
    };

    std::optional<std::lock_guard<std::mutex>> maybe_lock(Shard& s) {
        if (locking_) return std::optional<std::lock_guard<std::mutex>>(std::in_place, s.mu);
        return std::nullopt;
    }

    void grow(Shard& s) {
        std::vector<Entry> old = std::move(s.slots);
        s.slots.assign(old.size() * 2, Entry{});
        std::size_t m = s.slots.size() - 1;
        for (const Entry& e : old) {
            if (e.r < 0) continue;
            uint64_t h = mask_hash(e.key, e.r);
            std::size_t i = (h >> 8) & m;
            while (s.slots[i].r >= 0) i = (i + 1) & m;
            s.slots[i] = e;
        }
    }

    std::array<Shard, kShards> shards_;
    std::atomic<bool> saturated_{false};
    bool locking_;
};

// Recently finalized states per remaining budget. A state that is a subset of
// a finalized state with the same remaining budget cannot reach a higher value
// (closures are monotone), so the finalized value is an admissible upper
// bound for skipping siblings.
template <int W>
class DomStore {
public:
    explicit DomStore(int max_r) : buckets_(max_r + 1) {}

    int upper_bound(const Mask<W>& m, int r) const {
        const Bucket& b = buckets_[r];
        int best = INT_MAX;
        std::size_t count = std::min(b.entries.size(), kBucketCap);
        for (std::size_t i = 0; i < count; ++i) {
            const Entry& e = b.entries[i];
            if (e.val < best && m.subset_of(e.key)) best = e.val;
        }
        return best;
    }

    void insert(int r, const Mask<W>& m, int val) {
        Bucket& b = buckets_[r];
        if (b.entries.size() < kBucketCap) {
            b.entries.push_back({m, val});
        } else {
            b.entries[b.next] = {m, val};
            b.next = (b.next + 1) % kBucketCap;
        }
    }

private:
    static constexpr std::size_t kBucketCap = 1024;

    struct Entry {
        Mask<W> key;
        int val;
    };
    struct Bucket {
        std::vector<Entry> entries;
        std::size_t next = 0;
    };
    std::vector<Bucket> buckets_;
};

constexpr int kDomMinRemaining = 3;  // dominance checks only where subtrees are deep

template <int W>
class Engine {
public:
    Engine(const Graph& g, const SolverOptions& opt)
        : n_(g.vertex_count()),
          opt_(opt),
          memo_(opt.memo_bytes, opt.threads > 1),
          full_count_(g.vertex_count()) {
        adj_.resize(n_);
        nclosed_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            g.neighbors(v).for_each([&](int u) { adj_[v].set(u); });
            nclosed_[v] = adj_[v];
            nclosed_[v].set(v);
        }
        cands_ = closed_twin_reduction(g);
        started_ = std::chrono::steady_clock::now();
    }

    int solve_root(int k) {
        if (k == 0) return 0;  // C_G(∅) = ∅: no vertex of the empty set can force
        Context ctx(*this, k);
        if (opt_.threads <= 1) return ctx.solve(Mask<W>{}, 0, k);

        auto kids = ctx.children(Mask<W>{}, k);
        if (kids.empty()) return 0;
        std::atomic<std::size_t> next{0};
        std::atomic<int> best{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(opt_.threads);
        for (int t = 0; t < opt_.threads; ++t) {
            pool.emplace_back([&, t] {
                Context wctx(*this, k);
                try {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= kids.size()) break;
                        int val;
                        if (kids[i].pc == n_) {
                            val = n_;
                        } else if (auto hit = memo_.find(kids[i].m, k - 1)) {
                            val = *hit;
                        } else if (k == 1) {
                            val = kids[i].pc;
                        } else {
                            val = wctx.solve(kids[i].m, kids[i].pc, k - 1);
                        }
                        int cur = best.load();
                        while (val > cur && !best.compare_exchange_weak(cur, val)) {
                        }
                        if (best.load() == n_) next.store(kids.size());
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                    next.store(kids.size());
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        return best.load();
    }

    // Lexicographically smallest sorted sensor set over the candidate list
    // achieving `target`: greedily fix the smallest feasible next label, where
    // feasibility means the optimum stays reachable with the remaining budget.
    std::vector<int> reconstruct(int k, int target) {
        Context ctx(*this, k);
        std::vector<int> witness;
        Mask<W> state{};
        int last = -1;
        for (int step = 1; step <= k; ++step) {
            int remaining = k - step;
            bool found = false;
            for (int v : cands_) {
                if (v <= last || nclosed_[v].subset_of(state)) continue;
                Mask<W> child = ctx.closure_union(state, nclosed_[v]);
                int pc = child.popcount();
                int val;
                if (remaining == 0) {
                    val = pc;
                } else if (auto hit = memo_.find(child, remaining)) {
                    val = *hit;
                } else {
                    val = ctx.solve(child, pc, remaining);
                }
                if (val == target) {
                    witness.push_back(v);
                    state = child;
                    last = v;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("witness reconstruction failed");
        }
        return witness;
    }

    SolveStats stats() const {
        SolveStats s;
        s.nodes = nodes_.load();
        s.closures = closures_.load();
        s.memo_entries = memo_.entries();
        s.memo_saturated = memo_.saturated();
        s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
        return s;
    }

private:
    struct Kid {
        Mask<W> m;
        int pc;
    };

    // Per-thread search state: scratch buffers, private dominance store,
    // batched node accounting against the shared budget.
    struct Context {
        Engine& eng;
        DomStore<W> dom;
        std::vector<std::vector<Kid>> kids_by_r;
        std::vector<int> workstack;
        uint64_t local_nodes = 0;
        uint64_t local_closures = 0;

        Context(Engine& e, int k) : eng(e), dom(k + 1), kids_by_r(k + 1) {
            workstack.reserve(e.n_);
        }
        ~Context() {
            eng.nodes_.fetch_add(local_nodes);
            eng.closures_.fetch_add(local_closures);
        }

        Mask<W> closure_union(Mask<W> base, const Mask<W>& seed) {
            ++local_closures;
            Mask<W> fresh = seed.andnot(base);
            if (fresh.none()) return base;
            base |= seed;
            Mask<W> touched_nbrs{};
            fresh.for_each([&](int y) { touched_nbrs |= eng.adj_[y]; });
            Mask<W> pending = fresh;
            pending |= touched_nbrs & base;
            workstack.clear();
            pending.for_each([&](int v) { workstack.push_back(v); });
            while (!workstack.empty()) {
                int x = workstack.back();
                workstack.pop_back();
                pending.reset(x);
                Mask<W> unobserved = eng.adj_[x].andnot(base);
                if (unobserved.popcount() != 1) continue;
                int y = unobserved.first();
                base.set(y);
                Mask<W> touched = eng.adj_[y] & base;
                touched.set(y);
                touched.for_each([&](int t) {
                    if (!pending.test(t)) {
                        pending.set(t);
                        workstack.push_back(t);
                    }
                });
            }
            return base;
        }

        std::vector<Kid>& children(const Mask<W>& state, int r) {
            auto& kids = kids_by_r[r];
            kids.clear();
            for (int v : eng.cands_) {
                if (eng.nclosed_[v].subset_of(state)) continue;
                Mask<W> c = closure_union(state, eng.nclosed_[v]);
                bool dup = false;
                for (const Kid& k : kids)
                    if (k.m == c) {
                        dup = true;
                        break;
                    }
                if (!dup) kids.push_back({c, c.popcount()});
            }
            std::stable_sort(kids.begin(), kids.end(),
                             [](const Kid& a, const Kid& b) { return a.pc > b.pc; });
            return kids;
        }

        // Exact g(state, r) = max |C(state ∪ N[S'])| over sensor sets S' of
        // size r. Every value stored in the memo is exact; sibling skips only
        // happen when a dominating finalized state proves the child cannot
        // beat the best sibling seen so far.
        int solve(const Mask<W>& state, int state_pc, int r) {
            if (r == 0) return state_pc;
            if (auto hit = eng.memo_.find(state, r)) return *hit;
            if (++local_nodes % 4096 == 0) eng.check_budget(local_nodes);

            auto& kids = children(state, r);
            int best = state_pc;
            for (const Kid& kid : kids) {
                int val;
                if (kid.pc == eng.n_) {
                    val = eng.n_;
                } else if (auto hit = eng.memo_.find(kid.m, r - 1)) {
                    val = *hit;
                } else if (r == 1) {
                    val = kid.pc;
                } else {
                    if (r - 1 >= kDomMinRemaining &&
                        dom.upper_bound(kid.m, r - 1) <= best)
                        continue;
                    val = solve(kid.m, kid.pc, r - 1);
                }
                if (val > best) best = val;
                if (best == eng.n_) break;
            }
            eng.memo_.insert(state, r, best);
            if (r >= kDomMinRemaining) dom.insert(r, state, best);
            return best;
        }
    };

    void check_budget(uint64_t local) {
        if (opt_.node_budget == 0) return;
        uint64_t global = nodes_.load(std::memory_order_relaxed) + local;
        if (global > opt_.node_budget)
            throw ResourceLimitError(
                "search node budget exceeded; result would not be certifiably exact");
    }

    int n_;
    SolverOptions opt_;
    std::vector<Mask<W>> adj_;
    std::vector<Mask<W>> nclosed_;
    std::vector<int> cands_;
    Memo<W> memo_;
    int full_count_;
    std::atomic<uint64_t> nodes_{0};
    std::atomic<uint64_t> closures_{0};
    std::chrono::steady_clock::time_point started_;

    friend struct Context;
};

template <int W>
ObservanceTable table_impl(const Graph& g, int k_max, const SolverOptions& opt) {
    ObservanceTable table;
    table.n = g.vertex_count();
    Engine<W> engine(g, opt);
    table.rows.push_back({0, 0, {}, true});
    for (int k = 1; k <= k_max; ++k) {
        int val = engine.solve_root(k);
        std::vector<int> wit = engine.reconstruct(k, val);
        table.rows.push_back({k, val, std::move(wit), true});
        if (val == table.n) {
            table.gamma_p = k;
            break;
        }
    }
    if (!table.rows.empty() && table.rows.back().max_obs == table.n && !table.gamma_p)
        table.gamma_p = table.rows.back().k;
    table.stats = engine.stats();
    return table;
}

template <class F>
auto dispatch_width(int n, F f) {
    int words = (n + 63) / 64;
    if (words <= 1) return f(std::integral_constant<int, 1>{});
    if (words <= 2) return f(std::integral_constant<int, 2>{});
    if (words <= 4) return f(std::integral_constant<int, 4>{});
    if (words <= 8) return f(std::integral_constant<int, 8>{});
    if (words <= 16) return f(std::integral_constant<int, 16>{});
    throw ResourceLimitError("exact solver supports at most 1024 vertices (use greedy)");
}

}  // namespace

const ObservanceRow& ObservanceTable::row(int k) const {
    if (k < 0 || k >= int(rows.size()))
        throw std::out_of_range("no row for k=" + std::to_string(k));
    return rows[k];
}

bool ObservanceTable::exact_through_gamma_p() const {
    if (!gamma_p) return false;
    for (const auto& r : rows)
        if (!r.exact) return false;
    return true;
}

ObservanceTable observance_table(const Graph& g, int k_max, const SolverOptions& opt) {
    if (k_max < 0 || k_max > g.vertex_count())
        throw std::invalid_argument("k_max must be in 0..n");
    return dispatch_width(g.vertex_count(), [&](auto width) {
        return table_impl<decltype(width)::value>(g, k_max, opt);
    });
}

std::pair<int, std::vector<int>> max_obs(const Graph& g, int k, const SolverOptions& opt) {
    if (k < 0 || k > g.vertex_count()) throw std::invalid_argument("k must be in 0..n");
    return dispatch_width(g.vertex_count(), [&](auto width) -> std::pair<int, std::vector<int>> {
        Engine<decltype(width)::value> engine(g, opt);
        int val = engine.solve_root(k);
        return {val, engine.reconstruct(k, val)};
    });
}

int power_domination_number(const Graph& g, const SolverOptions& opt) {
    ObservanceTable t = observance_table(g, g.vertex_count(), opt);
    if (!t.gamma_p) throw std::logic_error("power domination number not reached");
    return *t.gamma_p;
}

int marginal_obs(const ObservanceTable& table, int k) {
    if (k < 1 || k >= int(table.rows.size()))
        throw std::invalid_argument("marginal observance needs 1 <= k <= last row");
    if (!table.rows[k].exact || !table.rows[k - 1].exact)
        throw std::invalid_argument("marginal observance requires exact rows");
    return table.rows[k].max_obs - table.rows[k - 1].max_obs;
}

std::pair<int, std::vector<int>> greedy_observance(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 0 || k > n) throw std::invalid_argument("k must be in 0..n");
    VertexSet cur(n);
    VertexSet chosen(n);
    std::vector<int> order;
    for (int step = 0; step < k; ++step) {
        int best_v = -1;
        int best_gain = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen.test(v)) continue;
            VertexSet ext = cur | g.closed_neighborhood(v);
            int gain = zero_forcing_closure_set(g, ext).count();
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        chosen.set(best_v);
        order.push_back(best_v);
        cur = zero_forcing_closure_set(g, cur | g.closed_neighborhood(best_v));
    }
    std::sort(order.begin(), order.end());
    return {cur.count(), order};
}

}  // namespace pdcost
