#pragma once

#include "pathlink/graph.hpp"

namespace pathlink {

// Base blocks over Z_v whose adjacent-pair differences cover Z_v \ {0}
// exactly once.
struct DifferenceFamily {
    int v = 0;
    BlockShape shape{BlockKind::Cycle, 4};
    std::vector<Block> base_blocks;
};

VerificationReport verify_difference_family(const DifferenceFamily& df);

// C^a = (0, a, (v+1)/2, (v-1)/8 + a) for a = 1..(v-1)/8; needs v = 1 (mod 8).
DifferenceFamily c4_difference_family(int v);

// Zig-zag P_5 base paths [0, 4j, 1, 4j-1, 2], j = 1..(v-1)/8; v = 1 (mod 8).
DifferenceFamily p5_difference_family(int v);

// Orbit of the base blocks under +1 mod v: a cyclic (K_v, shape)-design.
// Duplicate blocks after development signal a short orbit and abort.
Design develop(const DifferenceFamily& df);

// Hamiltonian cycle decomposition of K_v for odd v (zig-zag construction
// on Z_{v-1} plus a hub vertex): (v-1)/2 blocks of shape C_v.
Design walecki_cycle_design(int v);

// (K_n,P_k) exists iff n(n-1) = 0 (mod 2(k-1)) and n >= k (or n <= 1).
bool admissible_path_design(int n, int k);
// (K_v,C_k) exists iff k <= v, v odd, v(v-1) = 0 (mod 2k).
bool admissible_cycle_system(int v, int k);
// (K_n,P_4) orders: n = 0,1 (mod 3), n >= 4 or n <= 1.
bool admissible_p4_order(int n);

// Deterministic builders reused by the catalog generator and the linker.
Design p4_design_complete(int n);                   // two-apex machinery
Design p4_design_bipartite(int m, int n);           // K_{m,n}, m or n in {3,4} patterns
Design p5_design_k44_tile();                        // 4 base paths over K_{4,4}
Design p5_design_complete(int n);                   // n = 1 (mod 8) or n in {8,16,24}
Design p6_design_split_graph();                     // K_5 u K_{5,5} on 10 vertices

// Blocks of `d` pushed through id -> image[id]; host relabeled the same way.
Design relabel_design(const Design& d, const std::vector<Vertex>& image);

}  // namespace pathlink
