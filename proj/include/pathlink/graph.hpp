#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathlink/common.hpp"

namespace pathlink {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

Edge make_edge(Vertex u, Vertex v);

// Labeled simple undirected graph: sorted vertex ids, sorted canonical edges.
struct Graph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    static Graph from_edges(std::vector<Vertex> verts, std::vector<Edge> es);

    bool has_vertex(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    std::size_t edge_count() const { return edges.size(); }
    std::size_t vertex_count() const { return vertices.size(); }

    // Neighbor lists indexed by position in `vertices`.
    std::vector<std::vector<Vertex>> adjacency() const;

    bool operator==(const Graph&) const = default;
};

enum class BlockKind { Path, Cycle };

// P_k (k vertices, k-1 edges) or C_k (k vertices, k edges, k >= 3).
struct BlockShape {
    BlockKind kind;
    int length;

    static BlockShape path(int k);
    static BlockShape cycle(int k);
    static BlockShape parse(const std::string& text);  // "P4", "C9", ...

    int edge_count() const { return kind == BlockKind::Path ? length - 1 : length; }
    int vertex_count() const { return length; }
    bool contains_p4() const { return length >= 4; }
    std::string to_string() const;

    auto operator<=>(const BlockShape&) const = default;
};

// An ordered block; construction canonicalizes (paths: lexicographically
// smaller orientation; cycles: minimal rotation/reflection).
struct Block {
    BlockShape shape;
    std::vector<Vertex> vertices;

    Block(BlockShape s, std::vector<Vertex> verts);

    std::vector<Edge> edges() const;

    bool operator==(const Block&) const = default;
    auto operator<=>(const Block&) const = default;
};

// Host descriptor: constructor kind + parameters, or an explicit edge list.
struct HostDesc {
    enum class Kind { Complete, CompleteBipartite, Explicit };
    Kind kind = Kind::Complete;
    int a = 0;
    int b = 0;
    Graph explicit_graph;

    static HostDesc complete(int n) { return {Kind::Complete, n, 0, {}}; }
    static HostDesc bipartite(int m, int n) { return {Kind::CompleteBipartite, m, n, {}}; }
    static HostDesc from_graph(Graph g) { return {Kind::Explicit, 0, 0, std::move(g)}; }

    Graph graph() const;
    std::string to_string() const;

    bool operator==(const HostDesc&) const = default;
};

struct Design {
    HostDesc host;
    BlockShape shape;
    std::vector<Block> blocks;
    std::vector<std::string> comments;  // '#' lines carried through files

    Graph host_graph() const { return host.graph(); }

    bool operator==(const Design& o) const {
        return host == o.host && shape == o.shape && blocks == o.blocks;
    }
};

enum class FindingKind { MissingEdge, DuplicateEdge, ForeignEdge, BadBlockShape, NotSubgraph };

struct Finding {
    FindingKind kind;
    std::optional<Edge> edge;
    std::optional<int> block_index;
    std::string detail;
};

struct VerificationReport {
    bool valid = true;
    std::vector<Finding> violations;

    void add(Finding f) {
        valid = false;
        violations.push_back(std::move(f));
    }
};

std::string to_string(FindingKind k);
std::string to_string(const Finding& f);

// Per-block map from a domain design onto edge-subgraph blocks of a codomain.
struct DownLink {
    Design domain;
    Design codomain;
    std::vector<std::pair<int, int>> map;  // (domain block index, codomain block index)
};

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);

// Exact partition check: every block matches the shape, lies in the host,
// and covers each host edge exactly once. Reports both under- and
// over-coverage instead of failing fast.
VerificationReport verify_design(const Design& d);

VerificationReport verify_downlink(const DownLink& dl);

// Host minus the union of block edges; vertex set unchanged.
// An absent edge is a precondition error naming the edge.
Graph graph_subtract(const Graph& g, const std::vector<Block>& blocks);

}  // namespace pathlink
