#include "pathlink/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace pathlink {

namespace {

using Clock = std::chrono::steady_clock;

// Dense-id working copy of the input graph.
struct Arena {
    int n = 0;
    std::vector<Vertex> label;               // dense id -> original vertex
    std::vector<std::vector<int>> adj;       // sorted dense neighbor lists
    std::vector<std::vector<int>> edge_id;   // n*n -> edge index or -1
    std::vector<std::pair<int, int>> edges;  // dense endpoints, sorted
    std::vector<bool> end_only;

    explicit Arena(const Graph& g, const std::vector<Vertex>& constrained) {
        n = static_cast<int>(g.vertices.size());
        label = g.vertices;
        std::map<Vertex, int> dense;
        for (int i = 0; i < n; ++i) dense[label[i]] = i;
        adj.resize(n);
        edge_id.assign(n, std::vector<int>(n, -1));
        for (const auto& [u, v] : g.edges) {
            int a = dense[u], b = dense[v];
            int id = static_cast<int>(edges.size());
            edges.emplace_back(std::min(a, b), std::max(a, b));
            edge_id[a][b] = edge_id[b][a] = id;
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& list : adj) std::sort(list.begin(), list.end());
        end_only.assign(n, false);
        for (Vertex v : constrained) {
            auto it = dense.find(v);
            if (it != dense.end()) end_only[it->second] = true;
        }
    }
};

struct Placement {
    std::vector<int> seq;  // dense vertex sequence of the block
};

class Searcher {
public:
    Searcher(const Arena& arena, const SearchBudget& budget, std::atomic<bool>* stop)
        : a(arena), budget_(budget), stop_(stop), deadline_(Clock::now() +
              std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(budget.max_seconds))) {
        covered_.assign(a.edges.size(), false);
        used_.assign(a.n, false);
        if (budget_.seed != 0) rng_.seed(budget_.seed);
    }

    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    // Enumerates every placement of `shape` whose edge set contains edge
    // `eid` and is fully uncovered. Placements are canonical: paths carry
    // u before v, cycles start with [u, v, ...].
    std::vector<Placement> placements(BlockShape shape, int eid) {
        std::vector<Placement> out;
        auto [u, v] = a.edges[eid];
        const int k = shape.length;
        if (shape.kind == BlockKind::Cycle) {
            if (a.end_only[u] || a.end_only[v]) return out;
            seq_.assign({u, v});
            used_[u] = used_[v] = true;
            extend_cycle(k, out);
            used_[u] = used_[v] = false;
            return out;
        }
        for (int left = 0; left <= k - 2; ++left) {
            int right = k - 2 - left;
            if (a.end_only[u] && left > 0) continue;
            if (a.end_only[v] && right > 0) continue;
            seq_.assign({u, v});
            used_[u] = used_[v] = true;
            extend_path(left, right, out);
            used_[u] = used_[v] = false;
        }
        return out;
    }

    // Core DFS: cover the lowest uncovered edge with any remaining shape.
    // `remaining[s]` counts blocks of shapes[s] still to place; -1 means
    // unlimited (single-shape search).
    bool search(const std::vector<BlockShape>& shapes, std::vector<int>& remaining,
                std::vector<std::pair<int, Placement>>& chosen, int uncovered) {
        if (stop_ && stop_->load(std::memory_order_relaxed)) {
            out_of_budget = true;  // treat external stop as budget cut
            return false;
        }
        if (++nodes > budget_.max_nodes) {
            out_of_budget = true;
            return false;
        }
        if ((nodes & 2047) == 0 && Clock::now() > deadline_) {
            out_of_budget = true;
            return false;
        }
        if (uncovered == 0) {
            for (int r : remaining)
                if (r > 0) return false;
            return true;
        }
        int eid = 0;
        while (covered_[eid]) ++eid;

        for (std::size_t s = 0; s < shapes.size(); ++s) {
            if (remaining[s] == 0) continue;
            auto ps = placements(shapes[s], eid);
            if (budget_.seed != 0) std::shuffle(ps.begin(), ps.end(), rng_);
            for (auto& p : ps) {
                apply(shapes[s], p, true);
                if (remaining[s] > 0) --remaining[s];
                chosen.emplace_back(static_cast<int>(s), p);
                if (search(shapes, remaining, chosen, uncovered - shapes[s].edge_count()))
                    return true;
                chosen.pop_back();
                if (remaining[s] >= 0) ++remaining[s];
                apply(shapes[s], p, false);
                if (out_of_budget) return false;
            }
        }
        return false;
    }

private:
    void apply(BlockShape shape, const Placement& p, bool on) {
        for (std::size_t i = 0; i + 1 < p.seq.size(); ++i)
            covered_[a.edge_id[p.seq[i]][p.seq[i + 1]]] = on;
        if (shape.kind == BlockKind::Cycle)
            covered_[a.edge_id[p.seq.back()][p.seq.front()]] = on;
    }

    bool edge_free(int x, int y) const {
        int id = a.edge_id[x][y];
        return id >= 0 && !covered_[id];
    }

    // seq_ holds [u, v]; grow `left` vertices before u and `right` after v.
    void extend_path(int left, int right, std::vector<Placement>& out) {
        grow_left(left, right, out);
    }

    void grow_left(int left, int right, std::vector<Placement>& out) {
        if (left == 0) {
            grow_right(right, out);
            return;
        }
        int head = left_chain_.empty() ? seq_[0] : left_chain_.back();
        for (int w : a.adj[head]) {
            if (used_[w] || !edge_free(head, w)) continue;
            if (a.end_only[w] && left > 1) continue;  // would be interior
            left_chain_.push_back(w);
            used_[w] = true;
            grow_left(left - 1, right, out);
            used_[w] = false;
            left_chain_.pop_back();
        }
    }

    void grow_right(int right, std::vector<Placement>& out) {
        if (right == 0) {
            Placement p;
            p.seq.assign(left_chain_.rbegin(), left_chain_.rend());
            p.seq.insert(p.seq.end(), seq_.begin(), seq_.end());
            p.seq.insert(p.seq.end(), right_chain_.begin(), right_chain_.end());
            out.push_back(std::move(p));
            return;
        }
        int tail = right_chain_.empty() ? seq_[1] : right_chain_.back();
        for (int w : a.adj[tail]) {
            if (used_[w] || !edge_free(tail, w)) continue;
            if (a.end_only[w] && right > 1) continue;
            right_chain_.push_back(w);
            used_[w] = true;
            grow_right(right - 1, out);
            used_[w] = false;
            right_chain_.pop_back();
        }
    }

    void extend_cycle(int k, std::vector<Placement>& out) {
        if (static_cast<int>(seq_.size()) == k) {
            if (edge_free(seq_.back(), seq_.front())) {
                Placement p;
                p.seq = seq_;
                out.push_back(p);
            }
            return;
        }
        int tail = seq_.back();
        for (int w : a.adj[tail]) {
            if (used_[w] || a.end_only[w] || !edge_free(tail, w)) continue;
            seq_.push_back(w);
            used_[w] = true;
            extend_cycle(k, out);
            used_[w] = false;
            seq_.pop_back();
        }
    }

    const Arena& a;
    SearchBudget budget_;
    std::atomic<bool>* stop_;
    Clock::time_point deadline_;
    std::vector<bool> covered_;
    std::vector<bool> used_;
    std::vector<int> seq_;
    std::vector<int> left_chain_;
    std::vector<int> right_chain_;
    std::mt19937_64 rng_;

public:
    void precover(const Placement& p, BlockShape shape) { apply(shape, p, true); }
};

std::vector<Block> to_blocks(const Arena& a, BlockShape shape,
                             const std::vector<std::pair<int, Placement>>& chosen,
                             int shape_index) {
    std::vector<Block> blocks;
    for (const auto& [s, p] : chosen) {
        if (s != shape_index) continue;
        std::vector<Vertex> vs;
        vs.reserve(p.seq.size());
        for (int x : p.seq) vs.push_back(a.label[x]);
        blocks.emplace_back(shape, std::move(vs));
    }
    return blocks;
}

struct RunResult {
    bool found = false;
    bool exhausted_budget = false;
    std::uint64_t nodes = 0;
    std::vector<std::pair<int, Placement>> chosen;
};

RunResult run_single(const Arena& arena, const std::vector<BlockShape>& shapes,
                     std::vector<int> remaining, const SearchBudget& budget,
                     std::atomic<bool>* stop, const Placement* first, int first_shape,
                     int total_edges) {
    RunResult r;
    Searcher s(arena, budget, stop);
    int uncovered = total_edges;
    if (first) {
        s.precover(*first, shapes[first_shape]);
        if (remaining[first_shape] > 0) --remaining[first_shape];
        r.chosen.emplace_back(first_shape, *first);
        uncovered -= shapes[first_shape].edge_count();
    }
    r.found = s.search(shapes, remaining, r.chosen, uncovered);
    r.exhausted_budget = s.out_of_budget;
    r.nodes = s.nodes;
    if (!r.found) r.chosen.clear();
    return r;
}

// Shared driver for single-shape and mixed searches.
MixedOutcome drive(const Graph& g, const std::vector<BlockShape>& shapes,
                   std::vector<int> remaining, const SearchBudget& budget,
                   const OracleOptions& opts) {
    MixedOutcome out;
    const int total = static_cast<int>(g.edge_count());
    if (total == 0) {
        bool need_more = false;
        for (int r : remaining) need_more |= r > 0;
        out.status = need_more ? OracleStatus::Infeasible : OracleStatus::Found;
        return out;
    }

    Arena arena(g, opts.end_only);

    if (opts.jobs <= 1) {
        auto r = run_single(arena, shapes, remaining, budget, nullptr, nullptr, -1, total);
        out.nodes_explored = r.nodes;
        if (r.found) {
            out.status = OracleStatus::Found;
            for (std::size_t s = 0; s < shapes.size(); ++s) {
                auto bs = to_blocks(arena, shapes[s], r.chosen, static_cast<int>(s));
                out.blocks.insert(out.blocks.end(), bs.begin(), bs.end());
            }
        } else {
            out.status = r.exhausted_budget ? OracleStatus::Exhausted : OracleStatus::Infeasible;
        }
        return out;
    }

    // First-level split: enumerate placements covering edge 0, hand each
    // branch to a worker. Any witness is acceptable; Infeasible requires
    // every branch exhausted.
    Searcher enumerator(arena, budget, nullptr);
    std::vector<std::pair<int, Placement>> first_level;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        if (remaining[s] == 0) continue;
        for (auto& p : enumerator.placements(shapes[s], 0))
            first_level.emplace_back(static_cast<int>(s), std::move(p));
    }
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next{0};
    std::mutex m;
    std::optional<RunResult> winner;
    bool any_exhausted = false;
    std::uint64_t nodes_total = 0;

    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= first_level.size() || stop.load()) return;
            auto [si, p] = first_level[i];
            auto r = run_single(arena, shapes, remaining, budget, &stop, &p, si, total);
            std::lock_guard<std::mutex> lk(m);
            nodes_total += r.nodes;
            if (r.found && !winner) {
                winner = std::move(r);
                stop.store(true);
            } else if (r.exhausted_budget) {
                any_exhausted = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < opts.jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    out.nodes_explored = nodes_total;
    if (winner) {
        out.status = OracleStatus::Found;
        for (std::size_t s = 0; s < shapes.size(); ++s) {
            auto bs = to_blocks(arena, shapes[s], winner->chosen, static_cast<int>(s));
            out.blocks.insert(out.blocks.end(), bs.begin(), bs.end());
        }
    } else {
        out.status = any_exhausted ? OracleStatus::Exhausted : OracleStatus::Infeasible;
    }
    return out;
}

}  // namespace

OracleOutcome find_decomposition(const Graph& g, BlockShape shape, const SearchBudget& budget,
                                 const OracleOptions& opts) {
    OracleOutcome out;
    if (g.edge_count() % shape.edge_count() != 0) {
        out.status = OracleStatus::Infeasible;
        return out;
    }
    if (g.edge_count() > 0 && static_cast<int>(g.vertex_count()) < shape.vertex_count()) {
        out.status = OracleStatus::Infeasible;
        return out;
    }
    auto mixed = drive(g, {shape}, {-1}, budget, opts);
    out.status = mixed.status;
    out.nodes_explored = mixed.nodes_explored;
    if (mixed.status == OracleStatus::Found) {
        Design d{HostDesc::from_graph(g), shape, std::move(mixed.blocks), {}};
        if (!verify_design(d).valid)
            throw InternalError("oracle produced an invalid witness");
        out.witness = std::move(d);
    }
    return out;
}

MixedOutcome find_mixed_decomposition(const Graph& g, const std::vector<ShapeCount>& shapes,
                                      const SearchBudget& budget, const OracleOptions& opts) {
    int total = 0;
    std::vector<BlockShape> ss;
    std::vector<int> counts;
    for (const auto& [shape, count] : shapes) {
        total += shape.edge_count() * count;
        ss.push_back(shape);
        counts.push_back(count);
    }
    if (total != static_cast<int>(g.edge_count())) {
        MixedOutcome out;
        out.status = OracleStatus::Infeasible;
        return out;
    }
    return drive(g, ss, counts, budget, opts);
}

Design certify_claimed_graph(const Graph& g, BlockShape shape) {
    // Dense relabeling by sorted vertex id; memoization is a cache, the
    // oracle result is authoritative either way.
    static std::map<std::pair<BlockShape, std::vector<Edge>>, std::vector<Block>> cache;
    static std::mutex cache_mutex;

    std::map<Vertex, int> dense;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        dense[g.vertices[i]] = static_cast<int>(i);
    std::vector<Edge> key_edges;
    for (const auto& [u, v] : g.edges) key_edges.push_back(make_edge(dense[u], dense[v]));
    std::sort(key_edges.begin(), key_edges.end());
    auto key = std::make_pair(shape, key_edges);

    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            std::vector<Block> blocks;
            for (const auto& b : it->second) {
                std::vector<Vertex> vs;
                for (Vertex x : b.vertices) vs.push_back(g.vertices[x]);
                blocks.emplace_back(shape, std::move(vs));
            }
            return Design{HostDesc::from_graph(g), shape, std::move(blocks), {}};
        }
    }

    auto outcome = find_decomposition(g, shape, SearchBudget{10'000'000, 120.0, 0});
    if (outcome.status != OracleStatus::Found)
        throw InternalError("case machinery expected a decomposable gadget (" +
                            std::to_string(g.edge_count()) + " edges, shape " +
                            shape.to_string() + ", status " +
                            (outcome.status == OracleStatus::Infeasible ? "Infeasible"
                                                                        : "Exhausted") +
                            ")");
    std::vector<Block> canon;
    for (const auto& b : outcome.witness->blocks) {
        std::vector<Vertex> vs;
        for (Vertex x : b.vertices) vs.push_back(dense[x]);
        canon.emplace_back(shape, std::move(vs));
    }
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        cache.emplace(std::move(key), std::move(canon));
    }
    return *outcome.witness;
}

bool decomposable(const Graph& g, BlockShape shape, std::uint64_t max_nodes) {
    return find_decomposition(g, shape, SearchBudget{max_nodes, 30.0, 0}).status ==
           OracleStatus::Found;
}

}  // namespace pathlink
