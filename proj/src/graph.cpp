#include "pathlink/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pathlink {

Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw UsageError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph Graph::from_edges(std::vector<Vertex> verts, std::vector<Edge> es) {
    for (auto& e : es) e = make_edge(e.first, e.second);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    Graph g{std::move(verts), std::move(es)};
    for (const auto& [u, v] : g.edges) {
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw UsageError("edge endpoint not in vertex set: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
    }
    return g;
}

bool Graph::has_vertex(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(vertices.size());
    auto index_of = [&](Vertex v) {
        return std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
    };
    for (const auto& [u, v] : edges) {
        adj[index_of(u)].push_back(v);
        adj[index_of(v)].push_back(u);
    }
    return adj;
}

BlockShape BlockShape::path(int k) {
    if (k < 2) throw UsageError("path length must be >= 2, got " + std::to_string(k));
    return {BlockKind::Path, k};
}

BlockShape BlockShape::cycle(int k) {
    if (k < 3) throw UsageError("cycle length must be >= 3, got " + std::to_string(k));
    return {BlockKind::Cycle, k};
}

BlockShape BlockShape::parse(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'P' && text[0] != 'C'))
        throw UsageError("bad shape '" + text + "', expected P<k> or C<k>");
    int k = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw UsageError("bad shape '" + text + "', expected P<k> or C<k>");
        k = k * 10 + (text[i] - '0');
    }
    return text[0] == 'P' ? path(k) : cycle(k);
}

std::string BlockShape::to_string() const {
    return (kind == BlockKind::Path ? "P" : "C") + std::to_string(length);
}

namespace {

std::vector<Vertex> canonical_path(std::vector<Vertex> vs) {
    std::vector<Vertex> rev(vs.rbegin(), vs.rend());
    return std::min(vs, rev);
}

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& vs) {
    const std::size_t k = vs.size();
    std::vector<Vertex> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < k; ++r) {
            std::vector<Vertex> cand(k);
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t idx = dir == 0 ? (r + i) % k : (r + k - i) % k;
                cand[i] = vs[idx];
            }
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

}  // namespace

Block::Block(BlockShape s, std::vector<Vertex> verts) : shape(s), vertices(std::move(verts)) {
    if (static_cast<int>(vertices.size()) != shape.vertex_count())
        throw UsageError("block has " + std::to_string(vertices.size()) + " vertices, shape " +
                         shape.to_string() + " needs " + std::to_string(shape.vertex_count()));
    std::set<Vertex> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size())
        throw UsageError("block vertices not distinct in " + shape.to_string() + " block");
    vertices = shape.kind == BlockKind::Path ? canonical_path(std::move(vertices))
                                             : canonical_cycle(vertices);
}

std::vector<Edge> Block::edges() const {
    std::vector<Edge> es;
    es.reserve(shape.edge_count());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        es.push_back(make_edge(vertices[i], vertices[i + 1]));
    if (shape.kind == BlockKind::Cycle) es.push_back(make_edge(vertices.back(), vertices.front()));
    return es;
}

Graph HostDesc::graph() const {
    switch (kind) {
        case Kind::Complete: return complete_graph(a);
        case Kind::CompleteBipartite: return complete_bipartite(a, b);
        case Kind::Explicit: return explicit_graph;
    }
    throw InternalError("bad host kind");
}

std::string HostDesc::to_string() const {
    switch (kind) {
        case Kind::Complete: return "K " + std::to_string(a);
        case Kind::CompleteBipartite: return "K " + std::to_string(a) + " " + std::to_string(b);
        case Kind::Explicit: return "edges";
    }
    throw InternalError("bad host kind");
}

Graph complete_graph(int n) {
    if (n < 1) throw UsageError("complete graph needs n >= 1, got " + std::to_string(n));
    Graph g;
    g.vertices.resize(n);
    for (int i = 0; i < n; ++i) g.vertices[i] = i;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw UsageError("complete bipartite graph needs m,n >= 1, got " + std::to_string(m) +
                         "," + std::to_string(n));
    Graph g;
    g.vertices.resize(m + n);
    for (int i = 0; i < m + n; ++i) g.vertices[i] = i;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v) g.edges.emplace_back(u, v);
    return g;
}

std::string to_string(FindingKind k) {
    switch (k) {
        case FindingKind::MissingEdge: return "MissingEdge";
        case FindingKind::DuplicateEdge: return "DuplicateEdge";
        case FindingKind::ForeignEdge: return "ForeignEdge";
        case FindingKind::BadBlockShape: return "BadBlockShape";
        case FindingKind::NotSubgraph: return "NotSubgraph";
    }
    return "?";
}

std::string to_string(const Finding& f) {
    std::ostringstream os;
    os << to_string(f.kind);
    if (f.block_index) os << " block=" << *f.block_index;
    if (f.edge) os << " edge=(" << f.edge->first << "," << f.edge->second << ")";
    if (!f.detail.empty()) os << " " << f.detail;
    return os.str();
}

VerificationReport verify_design(const Design& d) {
    VerificationReport report;
    const Graph host = d.host_graph();
    std::map<Edge, int> coverage;
    for (const auto& e : host.edges) coverage[e] = 0;

    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const Block& b = d.blocks[bi];
        if (b.shape != d.shape) {
            report.add({FindingKind::BadBlockShape, std::nullopt, static_cast<int>(bi),
                        "block shape " + b.shape.to_string() + " != design shape " +
                            d.shape.to_string()});
            continue;
        }
        for (const auto& e : b.edges()) {
            auto it = coverage.find(e);
            if (it == coverage.end()) {
                report.add({FindingKind::ForeignEdge, e, static_cast<int>(bi), ""});
            } else {
                ++it->second;
            }
        }
    }
    for (const auto& [e, c] : coverage) {
        if (c == 0) report.add({FindingKind::MissingEdge, e, std::nullopt, ""});
        if (c > 1)
            report.add({FindingKind::DuplicateEdge, e, std::nullopt,
                        "covered " + std::to_string(c) + " times"});
    }
    return report;
}

VerificationReport verify_downlink(const DownLink& dl) {
    VerificationReport report;
    auto dom = verify_design(dl.domain);
    auto cod = verify_design(dl.codomain);
    for (auto& f : dom.violations) {
        f.detail = "domain: " + f.detail;
        report.add(std::move(f));
    }
    for (auto& f : cod.violations) {
        f.detail = "codomain: " + f.detail;
        report.add(std::move(f));
    }

    const int nd = static_cast<int>(dl.domain.blocks.size());
    const int nc = static_cast<int>(dl.codomain.blocks.size());
    std::vector<int> hit(nd, 0);
    for (const auto& [i, j] : dl.map) {
        if (i < 0 || i >= nd || j < 0 || j >= nc) {
            report.add({FindingKind::BadBlockShape, std::nullopt, i,
                        "link index out of range (" + std::to_string(i) + "," + std::to_string(j) +
                            ")"});
            continue;
        }
        ++hit[i];
        std::set<Edge> dom_edges;
        for (const auto& e : dl.domain.blocks[i].edges()) dom_edges.insert(e);
        for (const auto& e : dl.codomain.blocks[j].edges()) {
            if (!dom_edges.count(e)) {
                report.add({FindingKind::NotSubgraph, e, i,
                            "codomain block " + std::to_string(j) +
                                " is not an edge-subgraph of domain block " + std::to_string(i)});
                break;
            }
        }
    }
    for (int i = 0; i < nd; ++i) {
        if (hit[i] == 0)
            report.add({FindingKind::BadBlockShape, std::nullopt, i, "domain block unmapped"});
        if (hit[i] > 1)
            report.add({FindingKind::BadBlockShape, std::nullopt, i, "domain block mapped twice"});
    }
    return report;
}

Graph graph_subtract(const Graph& g, const std::vector<Block>& blocks) {
    std::set<Edge> remaining(g.edges.begin(), g.edges.end());
    for (const auto& b : blocks) {
        for (const auto& e : b.edges()) {
            auto it = remaining.find(e);
            if (it == remaining.end())
                throw UsageError("edge (" + std::to_string(e.first) + "," +
                                 std::to_string(e.second) + ") not present in graph");
            remaining.erase(it);
        }
    }
    Graph out;
    out.vertices = g.vertices;
    out.edges.assign(remaining.begin(), remaining.end());
    return out;
}

}  // namespace pathlink
