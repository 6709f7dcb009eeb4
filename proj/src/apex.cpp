#include "pathlink/apex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "pathlink/oracle.hpp"

namespace pathlink {

namespace {

using EdgeSet = std::set<Edge>;
using Adjacency = std::map<Vertex, std::set<Vertex>>;

Adjacency build_adjacency(const EdgeSet& edges) {
    Adjacency adj;
    for (const auto& [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

void remove_block_edges(EdgeSet& edges, Adjacency& adj, const Block& b) {
    for (const auto& e : b.edges()) {
        edges.erase(e);
        adj[e.first].erase(e.second);
        adj[e.second].erase(e.first);
    }
}

// Lowest-id P_4 through edge (u,v), if any: first as middle edge, then as
// an end edge in either orientation.
std::optional<Block> find_p4_through(const Adjacency& adj, Vertex u, Vertex v) {
    auto neighbors = [&](Vertex x) -> const std::set<Vertex>& {
        static const std::set<Vertex> empty;
        auto it = adj.find(x);
        return it == adj.end() ? empty : it->second;
    };
    for (Vertex x : neighbors(u)) {
        if (x == v) continue;
        for (Vertex y : neighbors(v)) {
            if (y == u || y == x) continue;
            return Block(BlockShape::path(4), {x, u, v, y});
        }
    }
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        for (Vertex y : neighbors(b)) {
            if (y == a) continue;
            for (Vertex z : neighbors(y)) {
                if (z == a || z == b) continue;
                return Block(BlockShape::path(4), {a, b, y, z});
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::pair<std::vector<Block>, Graph> extract_maximal_p4(const Graph& g) {
    EdgeSet edges(g.edges.begin(), g.edges.end());
    Adjacency adj = build_adjacency(edges);
    std::vector<Block> blocks;

    // Once an edge extends to no P_4 it never will again (edges only leave),
    // so one ordered pass with inner repetition gives a P_4-free residual.
    for (const Edge& e : g.edges) {
        while (edges.count(e)) {
            auto b = find_p4_through(adj, e.first, e.second);
            if (!b) break;
            remove_block_edges(edges, adj, *b);
            blocks.push_back(std::move(*b));
        }
    }

    Graph residual;
    residual.vertices = g.vertices;
    residual.edges.assign(edges.begin(), edges.end());
    return {std::move(blocks), std::move(residual)};
}

RemnantClassification classify_remnant(const Graph& residual) {
    RemnantClassification cls;
    Adjacency adj = build_adjacency(EdgeSet(residual.edges.begin(), residual.edges.end()));

    std::set<Vertex> seen;
    for (Vertex v : residual.vertices) {
        if (seen.count(v)) continue;
        // BFS component
        std::vector<Vertex> comp{v};
        seen.insert(v);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : adj[comp[i]]) {
                if (seen.insert(w).second) comp.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        if (comp.size() == 1) {
            cls.isolated.push_back(comp[0]);
            continue;
        }
        int comp_edges = 0;
        for (Vertex x : comp) comp_edges += static_cast<int>(adj[x].size());
        comp_edges /= 2;

        if (comp.size() == 3 && comp_edges == 3) {
            cls.triangles.push_back({comp[0], comp[1], comp[2]});
            continue;
        }
        // star: a center adjacent to every other vertex, the rest leaves
        Vertex center = comp[0];
        std::size_t best = adj[comp[0]].size();
        for (Vertex x : comp) {
            if (adj[x].size() > best) {
                best = adj[x].size();
                center = x;
            }
        }
        bool is_star = best == comp.size() - 1 && comp_edges == static_cast<int>(comp.size()) - 1;
        if (!is_star)
            throw InternalError("residual component is not a vertex, star or triangle "
                                "(maximal P_4 extraction bug)");
        StarComp star;
        star.center = center;
        for (Vertex x : comp)
            if (x != center) star.leaves.push_back(x);
        (star.vertex_count() % 2 == 1 ? cls.stars_odd : cls.stars_even).push_back(std::move(star));
    }
    auto by_center = [](const StarComp& a, const StarComp& b) { return a.center < b.center; };
    std::sort(cls.stars_odd.begin(), cls.stars_odd.end(), by_center);
    std::sort(cls.stars_even.begin(), cls.stars_even.end(), by_center);
    std::sort(cls.triangles.begin(), cls.triangles.end());
    std::sort(cls.isolated.begin(), cls.isolated.end());
    return cls;
}

std::pair<std::vector<Block>, std::vector<Edge>> decompose_star_gadget(const StarComp& star,
                                                                       Vertex alpha, Vertex beta) {
    if (star.leaves.empty()) throw UsageError("star needs at least one leaf");
    std::vector<Block> blocks;
    const Vertex c = star.center;
    std::size_t i = 0;
    for (; i + 1 < star.leaves.size(); i += 2) {
        Vertex u = star.leaves[i], w = star.leaves[i + 1];
        blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{alpha, u, c, w});
        blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{u, beta, w, alpha});
    }
    std::vector<Edge> remnant{make_edge(alpha, c), make_edge(c, beta)};
    if (i < star.leaves.size()) {  // odd leaf count: even vertex count
        Vertex v = star.leaves.back();
        remnant.push_back(make_edge(beta, v));
        remnant.push_back(make_edge(v, alpha));
        remnant.push_back(make_edge(c, v));
    }
    return {std::move(blocks), std::move(remnant)};
}

namespace {

struct Unit {
    std::vector<Block> blocks;
    std::vector<Edge> edges;
    Vertex star_center = -1;  // for pair units
};

Unit make_h3_unit(Vertex alpha, Vertex beta, Vertex h1, Vertex h2, Vertex h3) {
    Unit u;
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{h1, alpha, h2, beta});
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{h1, beta, h3, alpha});
    for (Vertex h : {h1, h2, h3}) {
        u.edges.push_back(make_edge(alpha, h));
        u.edges.push_back(make_edge(beta, h));
    }
    return u;
}

Unit make_triangle_unit(Vertex alpha, Vertex beta, const std::array<Vertex, 3>& tri) {
    Unit u;
    auto [a, b, c] = tri;
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{alpha, a, b, beta});
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{alpha, b, c, beta});
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{alpha, c, a, beta});
    u.edges = {make_edge(a, b), make_edge(b, c), make_edge(c, a)};
    for (Vertex x : tri) {
        u.edges.push_back(make_edge(alpha, x));
        u.edges.push_back(make_edge(beta, x));
    }
    return u;
}

// Union of three even-star remnants (alpha,c_i,beta,v_i) u [c_i,v_i].
Unit make_s2_triple_unit(Vertex alpha, Vertex beta, const std::array<std::pair<Vertex, Vertex>, 3>& cv) {
    Unit u;
    auto [p1, p2, p3] = cv;
    auto [c1, v1] = p1;
    auto [c2, v2] = p2;
    auto [c3, v3] = p3;
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{v1, c1, alpha, c2});
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{v2, c2, beta, c1});
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{v1, alpha, v2, beta});
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{v1, beta, v3, c3});
    u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{v3, alpha, c3, beta});
    for (auto [c, v] : cv) {
        u.edges.push_back(make_edge(alpha, c));
        u.edges.push_back(make_edge(c, beta));
        u.edges.push_back(make_edge(beta, v));
        u.edges.push_back(make_edge(v, alpha));
        u.edges.push_back(make_edge(c, v));
    }
    return u;
}

// Table 4, keyed by (|I| mod 3, |S_1| mod 3, |S_2| mod 3).
const std::map<std::array<int, 3>, std::string> kTable4 = {
    {{0, 0, 1}, "a_1"}, {{0, 2, 2}, "a_2"}, {{0, 1, 0}, "a_3"},
    {{1, 0, 0}, "a_4"}, {{1, 2, 1}, "a_5"}, {{1, 1, 2}, "a_6"},
    {{2, 0, 2}, "a_7"}, {{2, 2, 0}, "a_8"}, {{2, 1, 1}, "a_9"},
};

Graph edges_to_graph(const std::vector<Edge>& edges) {
    std::vector<Vertex> vs;
    for (const auto& [u, v] : edges) {
        vs.push_back(u);
        vs.push_back(v);
    }
    return Graph::from_edges(std::move(vs), edges);
}

}  // namespace

PartitionResult p4_decompose_two_apex(const ApexInput& input) {
    const Graph& g = input.g;
    const Vertex alpha = input.alpha, beta = input.beta;
    if (alpha == beta) throw UsageError("apex vertices must differ");
    if (!g.has_vertex(alpha) || !g.has_vertex(beta))
        throw UsageError("apex vertex not in graph");
    {
        Adjacency adj = build_adjacency(EdgeSet(g.edges.begin(), g.edges.end()));
        const std::size_t need = g.vertex_count() - 1;
        if (adj[alpha].size() != need || adj[beta].size() != need)
            throw UsageError("apex vertices must have degree |V|-1");
    }
    if (g.vertex_count() == 3 && g.edge_count() == 3)
        throw UsageError("K_3 admits no P_4-decomposition; the two-apex construction "
                         "needs at least 4 vertices when |E| is divisible by 3");

    PartitionResult result;

    // G = g minus the apexes; G' = maximal P_4-decomposable subgraph.
    std::vector<Vertex> inner_vs;
    std::vector<Edge> inner_es;
    for (Vertex v : g.vertices)
        if (v != alpha && v != beta) inner_vs.push_back(v);
    for (const auto& e : g.edges)
        if (e.first != alpha && e.first != beta && e.second != alpha && e.second != beta)
            inner_es.push_back(e);
    Graph inner = Graph::from_edges(inner_vs, inner_es);

    auto [blocks, residual] = extract_maximal_p4(inner);
    RemnantClassification cls = classify_remnant(residual);

    const int ri = static_cast<int>(cls.isolated.size()) % 3;
    const int r1 = static_cast<int>(cls.stars_odd.size()) % 3;
    const int r2 = static_cast<int>(cls.stars_even.size()) % 3;
    result.case_trace.push_back("i_" + std::to_string(ri == 0 ? 1 : ri == 1 ? 2 : 3));
    result.case_trace.push_back("iii_1" + std::to_string(r1 == 0 ? 1 : r1 == 1 ? 2 : 3));
    result.case_trace.push_back("iii_2" + std::to_string(r2 == 0 ? 1 : r2 == 1 ? 2 : 3));

    std::vector<Unit> h3_units, pair_units, s1_triples, s2_triples, triangle_units;

    // i) K_{A,I} by 3-subsets of I, ascending.
    std::size_t full_i = cls.isolated.size() / 3 * 3;
    for (std::size_t i = 0; i + 3 <= full_i; i += 3)
        h3_units.push_back(make_h3_unit(alpha, beta, cls.isolated[i], cls.isolated[i + 1],
                                        cls.isolated[i + 2]));

    // iii) star gadgets; remnants collected per parity class.
    std::vector<Vertex> s1_centers;
    std::vector<std::pair<Vertex, Vertex>> s2_cv;
    auto run_star = [&](const StarComp& star) {
        const Vertex c = star.center;
        std::size_t i = 0;
        for (; i + 1 < star.leaves.size(); i += 2) {
            Unit u;
            Vertex a = star.leaves[i], b = star.leaves[i + 1];
            u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{alpha, a, c, b});
            u.blocks.emplace_back(BlockShape::path(4), std::vector<Vertex>{a, beta, b, alpha});
            u.edges = {make_edge(c, a), make_edge(c, b), make_edge(alpha, a),
                       make_edge(alpha, b), make_edge(beta, a), make_edge(beta, b)};
            u.star_center = c;
            pair_units.push_back(std::move(u));
        }
        if (i < star.leaves.size())
            s2_cv.emplace_back(c, star.leaves.back());
        else
            s1_centers.push_back(c);
    };
    for (const auto& s : cls.stars_odd) run_star(s);
    for (const auto& s : cls.stars_even) run_star(s);

    // remnants of three odd stars form K_{A,{c1,c2,c3}}, same as an H_3 unit
    std::size_t full_s1 = s1_centers.size() / 3 * 3;
    for (std::size_t i = 0; i + 3 <= full_s1; i += 3)
        s1_triples.push_back(
            make_h3_unit(alpha, beta, s1_centers[i], s1_centers[i + 1], s1_centers[i + 2]));

    std::size_t full_s2 = s2_cv.size() / 3 * 3;
    for (std::size_t i = 0; i + 3 <= full_s2; i += 3)
        s2_triples.push_back(
            make_s2_triple_unit(alpha, beta, {s2_cv[i], s2_cv[i + 1], s2_cv[i + 2]}));

    // ii) triangle gadgets decompose completely.
    for (const auto& tri : cls.triangles)
        triangle_units.push_back(make_triangle_unit(alpha, beta, tri));

    // Final gadget: leftover remnants plus the edge [alpha,beta].
    std::vector<Edge> gadget{make_edge(alpha, beta)};
    std::vector<Edge> priority;  // preferred set-aside edges (K_A u K_{A,I})
    priority.push_back(make_edge(alpha, beta));
    for (std::size_t i = full_i; i < cls.isolated.size(); ++i) {
        gadget.push_back(make_edge(alpha, cls.isolated[i]));
        gadget.push_back(make_edge(beta, cls.isolated[i]));
        priority.push_back(make_edge(alpha, cls.isolated[i]));
        priority.push_back(make_edge(beta, cls.isolated[i]));
    }
    Vertex a3_center = -1;
    for (std::size_t i = full_s1; i < s1_centers.size(); ++i) {
        gadget.push_back(make_edge(alpha, s1_centers[i]));
        gadget.push_back(make_edge(beta, s1_centers[i]));
        a3_center = s1_centers[i];
    }
    for (std::size_t i = full_s2; i < s2_cv.size(); ++i) {
        auto [c, v] = s2_cv[i];
        gadget.push_back(make_edge(alpha, c));
        gadget.push_back(make_edge(c, beta));
        gadget.push_back(make_edge(beta, v));
        gadget.push_back(make_edge(v, alpha));
        gadget.push_back(make_edge(c, v));
    }

    std::vector<Block> gadget_blocks;
    const int t = static_cast<int>(gadget.size());

    auto undo_into_gadget = [&](std::vector<Unit>& units, std::size_t index) {
        Unit u = std::move(units[index]);
        units.erase(units.begin() + static_cast<long>(index));
        gadget.insert(gadget.end(), u.edges.begin(), u.edges.end());
    };

    if (t % 3 == 0) {
        auto label_it = kTable4.find({ri, r1, r2});
        if (label_it == kTable4.end()) throw InternalError("t = 0 (mod 3) outside Table 4");
        const std::string label = label_it->second;
        result.case_trace.push_back(label);

        if (label == "a_3") {
            // back-track: two radii of the leftover star of center c
            std::size_t idx = pair_units.size();
            for (std::size_t i = pair_units.size(); i-- > 0;) {
                if (pair_units[i].star_center == a3_center) {
                    idx = i;
                    break;
                }
            }
            if (idx == pair_units.size())
                throw InternalError("a_3 repair: leftover odd star has no pair unit");
            undo_into_gadget(pair_units, idx);
            result.case_trace.push_back("repair-Fig6");
        } else if (label == "a_4") {
            if (cls.isolated.size() > 1) {
                if (h3_units.empty()) throw InternalError("a_4 repair: missing H_3 unit");
                undo_into_gadget(h3_units, h3_units.size() - 1);
                result.case_trace.push_back("repair-Fig7");
            } else if (!triangle_units.empty()) {
                undo_into_gadget(triangle_units, triangle_units.size() - 1);
                result.case_trace.push_back("repair-Fig8");
            } else if (!pair_units.empty()) {
                undo_into_gadget(pair_units, pair_units.size() - 1);
                result.case_trace.push_back("repair-Fig9");
            } else if (!s2_triples.empty()) {
                undo_into_gadget(s2_triples, s2_triples.size() - 1);
                result.case_trace.push_back("repair-Fig10");
            } else {
                throw InternalError("a_4 repair: no unit available to back-track into");
            }
        }
        Design cat = certify_claimed_graph(edges_to_graph(gadget), BlockShape::path(4));
        gadget_blocks = cat.blocks;
    } else {
        // t = 1, 2 (mod 3): set aside 1 or 2 edges (preferring K_A u K_{A,I})
        // and decompose the rest; the oracle checks each candidate subset.
        const int want = t % 3;
        result.case_trace.push_back(want == 1 ? "t1" : "t2");
        std::vector<Edge> candidates = priority;
        for (const auto& e : gadget)
            if (std::find(candidates.begin(), candidates.end(), e) == candidates.end())
                candidates.push_back(e);

        auto try_aside = [&](const std::vector<Edge>& aside) -> bool {
            std::vector<Edge> rest;
            for (const auto& e : gadget)
                if (std::find(aside.begin(), aside.end(), e) == aside.end()) rest.push_back(e);
            if (rest.empty()) {
                result.leftover = aside;
                return true;
            }
            auto out = find_decomposition(edges_to_graph(rest), BlockShape::path(4),
                                          SearchBudget{2'000'000, 20.0, 0});
            if (out.status != OracleStatus::Found) return false;
            gadget_blocks = out.witness->blocks;
            result.leftover = aside;
            return true;
        };

        bool done = false;
        for (int round = 0; round < 4 && !done; ++round) {
            if (want == 1) {
                for (std::size_t i = 0; i < candidates.size() && !done; ++i)
                    done = try_aside({candidates[i]});
            } else {
                for (std::size_t i = 0; i < candidates.size() && !done; ++i)
                    for (std::size_t j = i + 1; j < candidates.size() && !done; ++j)
                        done = try_aside({candidates[i], candidates[j]});
            }
            if (done) break;
            // widen the gadget by undoing a unit, then retry
            if (!h3_units.empty())
                undo_into_gadget(h3_units, h3_units.size() - 1);
            else if (!pair_units.empty())
                undo_into_gadget(pair_units, pair_units.size() - 1);
            else if (!triangle_units.empty())
                undo_into_gadget(triangle_units, triangle_units.size() - 1);
            else if (!s2_triples.empty())
                undo_into_gadget(s2_triples, s2_triples.size() - 1);
            else
                break;
            candidates.clear();
            candidates = priority;
            for (const auto& e : gadget)
                if (std::find(candidates.begin(), candidates.end(), e) == candidates.end())
                    candidates.push_back(e);
        }
        if (!done) throw InternalError("set-aside search failed on the final gadget");
    }

    // Assemble the design over g minus the leftover edges.
    std::vector<Block> all = std::move(blocks);
    for (auto* units : {&h3_units, &pair_units, &s1_triples, &s2_triples, &triangle_units})
        for (const auto& u : *units)
            all.insert(all.end(), u.blocks.begin(), u.blocks.end());
    all.insert(all.end(), gadget_blocks.begin(), gadget_blocks.end());

    Graph host = g;
    if (!result.leftover.empty()) {
        std::set<Edge> left(result.leftover.begin(), result.leftover.end());
        Graph reduced;
        reduced.vertices = g.vertices;
        for (const auto& e : g.edges)
            if (!left.count(e)) reduced.edges.push_back(e);
        host = std::move(reduced);
    }
    result.design = Design{HostDesc::from_graph(std::move(host)), BlockShape::path(4),
                           std::move(all), {}};

    if (result.leftover.size() != g.edge_count() % 3)
        throw InternalError("leftover law violated");
    return result;
}

}  // namespace pathlink
