#include "pathlink/cyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pathlink/apex.hpp"
#include "pathlink/bipartite.hpp"
#include "pathlink/oracle.hpp"

namespace pathlink {

VerificationReport verify_difference_family(const DifferenceFamily& df) {
    VerificationReport report;
    if (df.v < 2) {
        report.add({FindingKind::BadBlockShape, std::nullopt, std::nullopt, "modulus too small"});
        return report;
    }
    std::vector<int> count(df.v, 0);
    for (std::size_t bi = 0; bi < df.base_blocks.size(); ++bi) {
        const Block& b = df.base_blocks[bi];
        if (b.shape != df.shape) {
            report.add({FindingKind::BadBlockShape, std::nullopt, static_cast<int>(bi),
                        "base block shape mismatch"});
            continue;
        }
        for (const auto& [x, y] : b.edges()) {
            int d1 = ((x - y) % df.v + df.v) % df.v;
            int d2 = (df.v - d1) % df.v;
            if (d1 == 0) {
                report.add({FindingKind::BadBlockShape, Edge{x, y}, static_cast<int>(bi),
                            "zero difference"});
                continue;
            }
            ++count[d1];
            ++count[d2];
        }
    }
    for (int d = 1; d < df.v; ++d) {
        if (count[d] == 0)
            report.add({FindingKind::MissingEdge, Edge{0, d}, std::nullopt,
                        "difference " + std::to_string(d) + " not covered"});
        else if (count[d] > 1)
            report.add({FindingKind::DuplicateEdge, Edge{0, d}, std::nullopt,
                        "difference " + std::to_string(d) + " covered " +
                            std::to_string(count[d]) + " times"});
    }
    return report;
}

DifferenceFamily c4_difference_family(int v) {
    if (v <= 1 || v % 8 != 1)
        throw UsageError("c4 difference family needs v = 1 (mod 8), v > 1; got " +
                         std::to_string(v));
    DifferenceFamily df;
    df.v = v;
    df.shape = BlockShape::cycle(4);
    const int q = (v - 1) / 8;
    for (int a = 1; a <= q; ++a)
        df.base_blocks.emplace_back(df.shape,
                                    std::vector<Vertex>{0, a, (v + 1) / 2, (v - 1) / 8 + a});
    // The lemma's difference list is verified, not assumed.
    auto rep = verify_difference_family(df);
    if (!rep.valid)
        throw InternalError("C_4 difference family fails coverage at v=" + std::to_string(v) +
                            " (flag for manual review)");
    return df;
}

DifferenceFamily p5_difference_family(int v) {
    if (v <= 1 || v % 8 != 1)
        throw UsageError("p5 difference family needs v = 1 (mod 8), v > 1; got " +
                         std::to_string(v));
    DifferenceFamily df;
    df.v = v;
    df.shape = BlockShape::path(5);
    for (int j = 1; j <= (v - 1) / 8; ++j)
        df.base_blocks.emplace_back(df.shape, std::vector<Vertex>{0, 4 * j, 1, 4 * j - 1, 2});
    auto rep = verify_difference_family(df);
    if (!rep.valid)
        throw InternalError("P_5 difference family fails coverage at v=" + std::to_string(v));
    return df;
}

Design develop(const DifferenceFamily& df) {
    auto rep = verify_difference_family(df);
    if (!rep.valid) throw UsageError("cannot develop an invalid difference family");

    Design d;
    d.host = HostDesc::complete(df.v);
    d.shape = df.shape;
    std::set<Block> seen;
    for (const auto& base : df.base_blocks) {
        for (int g = 0; g < df.v; ++g) {
            std::vector<Vertex> vs;
            for (Vertex x : base.vertices) vs.push_back((x + g) % df.v);
            Block b(df.shape, std::move(vs));
            if (!seen.insert(b).second)
                throw UsageError("duplicate block after development (short orbit)");
            d.blocks.push_back(std::move(b));
        }
    }
    return d;
}

Design walecki_cycle_design(int v) {
    if (v < 3 || v % 2 == 0) throw UsageError("walecki needs odd v >= 3");
    const int m = v - 1;  // Z_m plus the hub v-1
    const Vertex hub = v - 1;
    Design d;
    d.host = HostDesc::complete(v);
    d.shape = BlockShape::cycle(v);
    std::vector<int> zig;
    zig.push_back(0);
    for (int i = 1; i <= m / 2; ++i) {
        zig.push_back(i);
        if (static_cast<int>(zig.size()) < m) zig.push_back(m - i);
    }
    for (int j = 0; j < m / 2; ++j) {
        std::vector<Vertex> vs{hub};
        for (int z : zig) vs.push_back((z + j) % m);
        d.blocks.emplace_back(d.shape, std::move(vs));
    }
    if (!verify_design(d).valid) throw InternalError("walecki construction failed verification");
    return d;
}

bool admissible_path_design(int n, int k) {
    if (n <= 1) return true;
    if (n < k) return false;
    return (static_cast<long long>(n) * (n - 1)) % (2 * (k - 1)) == 0;
}

bool admissible_cycle_system(int v, int k) {
    if (v < k || v % 2 == 0) return false;
    return (static_cast<long long>(v) * (v - 1)) % (2 * k) == 0;
}

bool admissible_p4_order(int n) { return admissible_path_design(n, 4); }

Design relabel_design(const Design& d, const std::vector<Vertex>& image) {
    Graph host = d.host_graph();
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    auto map = [&](Vertex x) {
        if (x < 0 || x >= static_cast<Vertex>(image.size()))
            throw UsageError("relabel image too small for vertex " + std::to_string(x));
        return image[x];
    };
    for (Vertex x : host.vertices) verts.push_back(map(x));
    for (const auto& [u, w] : host.edges) edges.push_back(make_edge(map(u), map(w)));
    Design out;
    out.host = HostDesc::from_graph(Graph::from_edges(std::move(verts), std::move(edges)));
    out.shape = d.shape;
    for (const auto& b : d.blocks) {
        std::vector<Vertex> vs;
        for (Vertex x : b.vertices) vs.push_back(map(x));
        out.blocks.emplace_back(d.shape, std::move(vs));
    }
    return out;
}

Design p4_design_complete(int n) {
    if (!admissible_p4_order(n) || n < 4)
        throw UsageError("(K_" + std::to_string(n) + ",P_4)-design is inadmissible");
    auto result = p4_decompose_two_apex({complete_graph(n), 0, 1});
    if (!result.leftover.empty()) throw InternalError("unexpected leftover on admissible K_n");
    return Design{HostDesc::complete(n), BlockShape::path(4), std::move(result.design.blocks), {}};
}

namespace {

// K_{2,3} with parts {a1,a2} and {h1,h2,h3}: two paths.
std::vector<Block> k23_blocks(Vertex a1, Vertex a2, Vertex h1, Vertex h2, Vertex h3) {
    return {Block(BlockShape::path(4), {h1, a1, h2, a2}),
            Block(BlockShape::path(4), {h1, a2, h3, a1})};
}

}  // namespace

Design p4_design_bipartite(int m, int n) {
    const Graph host = complete_bipartite(m, n);
    if ((m * n) % 3 != 0 || m < 2 || n < 2)
        throw UsageError("(K_{" + std::to_string(m) + "," + std::to_string(n) +
                         "},P_4)-design is inadmissible");
    std::vector<Block> blocks;
    auto part1 = [&](int i) { return i; };
    auto part2 = [&](int j) { return m + j; };

    if (n % 3 == 0) {
        // split the second part into triples; pair up the first part,
        // odd remainder handled by a K_{3,3} oracle tile
        int i = 0;
        for (; i + 2 <= m; i += 2) {
            for (int j = 0; j + 3 <= n; j += 3) {
                auto bs = k23_blocks(part1(i), part1(i + 1), part2(j), part2(j + 1), part2(j + 2));
                blocks.insert(blocks.end(), bs.begin(), bs.end());
            }
        }
        if (i < m) {
            // one leftover row of K_{1,n} cannot stand alone; redo the last
            // three rows as K_{3,3} tiles instead
            blocks.clear();
            if (m % 2 == 1 && m >= 3) {
                for (i = 0; i + 2 <= m - 3; i += 2)
                    for (int j = 0; j + 3 <= n; j += 3) {
                        auto bs = k23_blocks(part1(i), part1(i + 1), part2(j), part2(j + 1),
                                             part2(j + 2));
                        blocks.insert(blocks.end(), bs.begin(), bs.end());
                    }
                for (int j = 0; j + 3 <= n; j += 3) {
                    auto tile = certify_claimed_graph(
                        Graph::from_edges({part1(m - 3), part1(m - 2), part1(m - 1), part2(j),
                                           part2(j + 1), part2(j + 2)},
                                          {{part1(m - 3), part2(j)},
                                           {part1(m - 3), part2(j + 1)},
                                           {part1(m - 3), part2(j + 2)},
                                           {part1(m - 2), part2(j)},
                                           {part1(m - 2), part2(j + 1)},
                                           {part1(m - 2), part2(j + 2)},
                                           {part1(m - 1), part2(j)},
                                           {part1(m - 1), part2(j + 1)},
                                           {part1(m - 1), part2(j + 2)}}),
                        BlockShape::path(4));
                    blocks.insert(blocks.end(), tile.blocks.begin(), tile.blocks.end());
                }
            } else {
                throw UsageError("unsupported bipartite P_4 host K_{" + std::to_string(m) + "," +
                                 std::to_string(n) + "}");
            }
        }
    } else if (m % 3 == 0) {
        auto sw = p4_design_bipartite(n, m);
        // swap the parts back
        std::vector<Vertex> image(m + n);
        for (int j = 0; j < n; ++j) image[j] = m + j;
        for (int i = 0; i < m; ++i) image[n + i] = i;
        auto rel = relabel_design(sw, image);
        blocks = std::move(rel.blocks);
    } else {
        throw UsageError("neither part divisible by 3 in K_{" + std::to_string(m) + "," +
                         std::to_string(n) + "}");
    }

    Design d{HostDesc::bipartite(m, n), BlockShape::path(4), std::move(blocks), {}};
    if (!verify_design(d).valid) throw InternalError("bipartite P_4 tiling failed verification");
    return d;
}

Design p5_design_k44_tile() {
    // base path [y_0, x_0, y_1, x_3, y_2] developed mod 4; x = part 1, y = part 2
    Design d;
    d.host = HostDesc::bipartite(4, 4);
    d.shape = BlockShape::path(5);
    auto x = [](int i) { return i % 4; };
    auto y = [](int j) { return 4 + (j % 4); };
    for (int i = 0; i < 4; ++i)
        d.blocks.emplace_back(d.shape,
                              std::vector<Vertex>{y(i), x(i), y(i + 1), x(i + 3), y(i + 2)});
    if (!verify_design(d).valid) throw InternalError("K_{4,4} P_5 tile failed verification");
    return d;
}

namespace {

// P_5-decomposition of K_{A,B} with |A| = |B| = 8 given explicit vertex ids,
// as four K_{4,4} tiles.
std::vector<Block> k88_p5_blocks(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Block> out;
    Design tile = p5_design_k44_tile();
    for (int ra = 0; ra < 2; ++ra) {
        for (int rb = 0; rb < 2; ++rb) {
            std::vector<Vertex> image(8);
            for (int i = 0; i < 4; ++i) image[i] = a[4 * ra + i];
            for (int j = 0; j < 4; ++j) image[4 + j] = b[4 * rb + j];
            auto rel = relabel_design(tile, image);
            out.insert(out.end(), rel.blocks.begin(), rel.blocks.end());
        }
    }
    return out;
}

}  // namespace

Design p5_design_complete(int n) {
    if (!admissible_path_design(n, 5))
        throw UsageError("(K_" + std::to_string(n) + ",P_5)-design is inadmissible");
    Design d;
    d.host = HostDesc::complete(n);
    d.shape = BlockShape::path(5);
    if (n % 8 == 1) {
        d.blocks = develop(p5_difference_family(n)).blocks;
    } else if (n == 8) {
        auto out = find_decomposition(complete_graph(8), d.shape);
        if (out.status != OracleStatus::Found) throw InternalError("K_8 P_5 search failed");
        d.blocks = out.witness->blocks;
    } else if (n == 16 || n == 24) {
        // K_16 = K_8 u K_8 u K_{8,8}; K_24 adds one more 8-block and slabs
        std::vector<std::vector<Vertex>> groups;
        for (int g = 0; g < n / 8; ++g) {
            std::vector<Vertex> grp;
            for (int i = 0; i < 8; ++i) grp.push_back(8 * g + i);
            groups.push_back(std::move(grp));
        }
        Design k8 = p5_design_complete(8);
        for (const auto& grp : groups) {
            auto rel = relabel_design(k8, grp);
            d.blocks.insert(d.blocks.end(), rel.blocks.begin(), rel.blocks.end());
        }
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t j = i + 1; j < groups.size(); ++j) {
                auto bs = k88_p5_blocks(groups[i], groups[j]);
                d.blocks.insert(d.blocks.end(), bs.begin(), bs.end());
            }
    } else {
        throw NotCatalogedError("no P_5 construction for K_" + std::to_string(n));
    }
    if (!verify_design(d).valid)
        throw InternalError("P_5 design construction failed verification at n=" +
                            std::to_string(n));
    return d;
}

Design p6_design_split_graph() {
    // K_5 on S = {0..4} plus all S x N edges, N = {5..9}: 35 edges, 7 paths
    Design d;
    d.shape = BlockShape::path(6);
    auto S = [](int i) { return ((i % 5) + 5) % 5; };
    auto N = [](int i) { return 5 + ((i % 5) + 5) % 5; };
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < 5; ++i)
        for (int j = 5; j < 10; ++j) edges.emplace_back(i, j);
    d.host = HostDesc::from_graph(Graph::from_edges({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, edges));
    for (int i = 0; i < 5; ++i)
        d.blocks.emplace_back(
            d.shape, std::vector<Vertex>{N(i), S(i), S(i + 1), N(i + 3), S(i + 2), S(i + 4)});
    d.blocks.emplace_back(d.shape, std::vector<Vertex>{N(0), S(1), N(4), S(0), N(3), S(4)});
    d.blocks.emplace_back(d.shape, std::vector<Vertex>{S(4), N(2), S(3), N(1), S(2), N(0)});
    if (!verify_design(d).valid) throw InternalError("split-graph P_6 design failed verification");
    return d;
}

}  // namespace pathlink
