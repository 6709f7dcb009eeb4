#pragma once

#include <array>

#include "pathlink/graph.hpp"

namespace pathlink {

struct ApexInput {
    Graph g;
    Vertex alpha;
    Vertex beta;
};

struct StarComp {
    Vertex center;
    std::vector<Vertex> leaves;  // ascending
    int vertex_count() const { return static_cast<int>(leaves.size()) + 1; }
};

// Components of the P_4-free residual: isolated vertices, stars split by
// vertex-count parity, and triangles.
struct RemnantClassification {
    std::vector<Vertex> isolated;
    std::vector<StarComp> stars_odd;   // S_1: odd number of vertices
    std::vector<StarComp> stars_even;  // S_2: even number of vertices
    std::vector<std::array<Vertex, 3>> triangles;
};

struct PartitionResult {
    Design design;                        // over the P_4-decomposed part
    std::vector<Edge> leftover;           // 0..2 edges, |E| mod 3 of them
    std::vector<std::string> case_trace;  // i_*, iii_*, a_*, repair-Fig*
};

// Greedy maximal P_4 extraction: repeatedly removes a P_4 (lowest canonical
// edge first, lowest-id extensions) until the residual is P_4-free.
std::pair<std::vector<Block>, Graph> extract_maximal_p4(const Graph& g);

// Exact partition of a P_4-free graph into isolated vertices, stars and
// triangles. A component containing a P_4 is an internal error.
RemnantClassification classify_remnant(const Graph& residual);

// Star gadget S_c u K_{{alpha,beta},V(S_c)}: blocks plus the stated remnant
// ([alpha,c,beta] for an odd vertex count, (alpha,c,beta,v) u [c,v] for even).
std::pair<std::vector<Block>, std::vector<Edge>> decompose_star_gadget(const StarComp& star,
                                                                       Vertex alpha, Vertex beta);

// The two-apex engine: P_4-design plus 0, 1 or 2 leftover edges according
// to |E| mod 3.
PartitionResult p4_decompose_two_apex(const ApexInput& input);

}  // namespace pathlink
