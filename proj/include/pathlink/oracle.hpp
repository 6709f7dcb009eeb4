#pragma once

#include <cstdint>
#include <optional>

#include "pathlink/graph.hpp"

namespace pathlink {

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 60.0;
    std::uint64_t seed = 0;  // 0 = lexicographic placement order
};

enum class OracleStatus { Found, Infeasible, Exhausted };

struct OracleOutcome {
    OracleStatus status = OracleStatus::Exhausted;
    std::optional<Design> witness;
    std::uint64_t nodes_explored = 0;
};

struct OracleOptions {
    // Vertices that may only appear as path endpoints (never interior,
    // never inside a cycle block). Used for structurally constrained
    // catalog searches.
    std::vector<Vertex> end_only;
    int jobs = 1;
};

// Exhaustive backtracking search for a (g, shape)-design. Branches on the
// lowest-indexed uncovered edge and enumerates every shape placement
// covering it, so Infeasible means a complete search proved non-existence.
OracleOutcome find_decomposition(const Graph& g, BlockShape shape,
                                 const SearchBudget& budget = {},
                                 const OracleOptions& opts = {});

// Decomposition of a graph into a fixed multiset of block shapes
// (e.g. 7 paths P_4 plus 2 paths P_5). Blocks of the witness are grouped
// by shape in the order given.
struct ShapeCount {
    BlockShape shape;
    int count = 0;
};
struct MixedOutcome {
    OracleStatus status = OracleStatus::Exhausted;
    std::vector<Block> blocks;
    std::uint64_t nodes_explored = 0;
};
MixedOutcome find_mixed_decomposition(const Graph& g, const std::vector<ShapeCount>& shapes,
                                      const SearchBudget& budget = {},
                                      const OracleOptions& opts = {});

// Oracle-backed catalog for the bounded-size remnant graphs of the case
// machinery (<= 24 edges). Memoized on the densely relabeled edge set.
// Throws InternalError if the oracle cannot decompose the graph.
Design certify_claimed_graph(const Graph& g, BlockShape shape);

// True iff g decomposes into copies of shape (complete small-graph check).
bool decomposable(const Graph& g, BlockShape shape, std::uint64_t max_nodes = 2'000'000);

}  // namespace pathlink
