#include "doctest.h"

#include <random>
#include <set>

#include "pathlink/apex.hpp"
#include "pathlink/oracle.hpp"

using namespace pathlink;

namespace {

// Random graph on base vertices 0..n-1 plus two universal vertices n, n+1.
ApexInput random_two_apex(std::mt19937& rng, int base_n, double p) {
    std::vector<Edge> edges;
    std::vector<Vertex> verts;
    for (int i = 0; i < base_n; ++i) verts.push_back(i);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < base_n; ++u)
        for (int v = u + 1; v < base_n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    Vertex alpha = base_n, beta = base_n + 1;
    verts.push_back(alpha);
    verts.push_back(beta);
    for (int u = 0; u < base_n; ++u) {
        edges.emplace_back(u, alpha);
        edges.emplace_back(u, beta);
    }
    edges.emplace_back(alpha, beta);
    return {Graph::from_edges(verts, edges), alpha, beta};
}

// Residual graph built directly from component counts; the base graph is
// P_4-free so extraction removes nothing and the classification is forced.
ApexInput residual_instance(int isolated, const std::vector<int>& star_leaf_counts,
                            int triangles) {
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    int next = 0;
    for (int i = 0; i < isolated; ++i) verts.push_back(next++);
    for (int leaves : star_leaf_counts) {
        int c = next++;
        verts.push_back(c);
        for (int l = 0; l < leaves; ++l) {
            verts.push_back(next);
            edges.emplace_back(c, next++);
        }
    }
    for (int tIdx = 0; tIdx < triangles; ++tIdx) {
        int a = next++, b = next++, c = next++;
        verts.insert(verts.end(), {a, b, c});
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
        edges.emplace_back(a, c);
    }
    Vertex alpha = next, beta = next + 1;
    verts.push_back(alpha);
    verts.push_back(beta);
    for (int v = 0; v < next; ++v) {
        edges.emplace_back(v, alpha);
        edges.emplace_back(v, beta);
    }
    edges.emplace_back(alpha, beta);
    return {Graph::from_edges(verts, edges), alpha, beta};
}

bool has_label(const PartitionResult& r, const std::string& label) {
    for (const auto& s : r.case_trace)
        if (s == label) return true;
    return false;
}

void check_result(const ApexInput& in, const PartitionResult& r) {
    CHECK(r.leftover.size() == in.g.edge_count() % 3);
    CHECK(verify_design(r.design).valid);
    // design blocks plus leftover partition E(g)
    std::set<Edge> covered;
    for (const auto& b : r.design.blocks)
        for (const auto& e : b.edges()) CHECK(covered.insert(e).second);
    for (const auto& e : r.leftover) CHECK(covered.insert(e).second);
    CHECK(covered.size() == in.g.edge_count());
}

}  // namespace

TEST_CASE("extract_maximal_p4 basics") {
    auto tri = Graph::from_edges({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}});
    auto [b1, r1] = extract_maximal_p4(tri);
    CHECK(b1.empty());
    CHECK(r1.edge_count() == 3);

    auto p4 = Graph::from_edges({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
    auto [b2, r2] = extract_maximal_p4(p4);
    CHECK(b2.size() == 1);
    CHECK(r2.edge_count() == 0);

    auto [b3, r3] = extract_maximal_p4(complete_graph(4));
    CHECK(b3.size() == 2);
    CHECK(r3.edge_count() == 0);
}

TEST_CASE("classify_remnant") {
    auto g = Graph::from_edges({0, 1, 2, 3, 4, 5, 6, 7, 8, 9},
                               {{3, 4}, {3, 5}, {3, 6},          // 3-edge star (4 vertices)
                                {7, 8}, {8, 9}, {7, 9}});        // triangle
    auto cls = classify_remnant(g);
    CHECK(cls.isolated == std::vector<Vertex>{0, 1, 2});
    REQUIRE(cls.stars_even.size() == 1);
    CHECK(cls.stars_even[0].center == 3);
    CHECK(cls.stars_odd.empty());
    CHECK(cls.triangles.size() == 1);

    // 2-edge star (3 vertices) is odd
    auto g2 = Graph::from_edges({0, 1, 2}, {{1, 0}, {1, 2}});
    auto cls2 = classify_remnant(g2);
    REQUIRE(cls2.stars_odd.size() == 1);
    CHECK(cls2.stars_odd[0].center == 1);

    auto bad = Graph::from_edges({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(classify_remnant(bad), InternalError);
}

TEST_CASE("decompose_star_gadget remnant shapes") {
    // 2-vertex star: whole gadget is the remnant
    auto [b1, r1] = decompose_star_gadget({5, {6}}, 10, 11);
    CHECK(b1.empty());
    CHECK(r1.size() == 5);

    // 3-vertex star: remnant [alpha,c,beta]
    auto [b2, r2] = decompose_star_gadget({5, {6, 7}}, 10, 11);
    CHECK(b2.size() == 2);
    CHECK(r2.size() == 2);

    // 4-vertex star: remnant has 5 edges, 2 blocks
    auto [b3, r3] = decompose_star_gadget({5, {6, 7, 8}}, 10, 11);
    CHECK(b3.size() == 2);
    CHECK(r3.size() == 5);

    // blocks + remnant partition the gadget edge set
    std::set<Edge> covered;
    for (const auto& b : b3)
        for (const auto& e : b.edges()) CHECK(covered.insert(e).second);
    for (const auto& e : r3) CHECK(covered.insert(e).second);
    CHECK(covered.size() == 11);
}

TEST_CASE("K_6 decomposes fully, K_5 leaves one edge") {
    ApexInput k6{complete_graph(6), 0, 1};
    auto r6 = p4_decompose_two_apex(k6);
    CHECK(r6.design.blocks.size() == 5);
    CHECK(r6.leftover.empty());
    check_result(k6, r6);

    ApexInput k5{complete_graph(5), 3, 4};
    auto r5 = p4_decompose_two_apex(k5);
    CHECK(r5.design.blocks.size() == 3);
    CHECK(r5.leftover.size() == 1);
    check_result(k5, r5);
}

TEST_CASE("K_2 u K_{2,4}: case i with |I|=4 and the a_4 repair") {
    auto in = residual_instance(4, {}, 0);  // 9 edges
    REQUIRE(in.g.edge_count() == 9);
    auto r = p4_decompose_two_apex(in);
    CHECK(r.design.blocks.size() == 3);
    check_result(in, r);
    CHECK(has_label(r, "a_4"));
    CHECK(has_label(r, "repair-Fig7"));
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(p4_decompose_two_apex({complete_graph(6), 0, 0}), UsageError);
    CHECK_THROWS_AS(p4_decompose_two_apex({complete_graph(3), 0, 1}), UsageError);
    auto g = Graph::from_edges({0, 1, 2}, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(p4_decompose_two_apex({g, 0, 2}), UsageError);  // degree too low
}

TEST_CASE("targeted residuals hit every table case and repair") {
    struct Probe {
        int isolated;
        std::vector<int> stars;  // leaf counts
        int triangles;
        std::string label;
        std::string repair;  // optional
    };
    // star leaf parity: even leaves -> S_1 (odd vertex count), odd -> S_2
    std::vector<Probe> probes{
        {0, {1}, 0, "a_1", ""},            // one P_2 star: iii_22
        {0, {2, 2, 1, 1}, 0, "a_2", ""},   // |S_1|=2, |S_2|=2
        {0, {2}, 0, "a_3", "repair-Fig6"},
        {4, {}, 0, "a_4", "repair-Fig7"},
        {1, {}, 1, "a_4", "repair-Fig8"},
        {1, {2, 2, 2}, 0, "a_4", "repair-Fig9"},
        {1, {1, 1, 1}, 0, "a_4", "repair-Fig10"},
        {1, {2, 2, 1}, 0, "a_5", ""},
        {1, {2, 1, 1}, 0, "a_6", ""},
        {2, {1, 1}, 0, "a_7", ""},
        {2, {2, 2}, 0, "a_8", ""},
        {2, {2, 1}, 0, "a_9", ""},
    };
    for (const auto& p : probes) {
        CAPTURE(p.label);
        auto in = residual_instance(p.isolated, p.stars, p.triangles);
        REQUIRE(in.g.edge_count() % 3 == 0);
        auto r = p4_decompose_two_apex(in);
        check_result(in, r);
        CHECK(has_label(r, p.label));
        if (!p.repair.empty()) CHECK(has_label(r, p.repair));
    }
}

TEST_CASE("leftover law on seeded random two-apex graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 12);
        double p = 0.15 + 0.7 * (rng() % 100) / 100.0;
        auto in = random_two_apex(rng, n, p);
        CAPTURE(trial);
        auto r = p4_decompose_two_apex(in);
        check_result(in, r);
    }
}

TEST_CASE("triangle gadget invariant: 3 blocks per triangle") {
    // 3 triangles + K_{2,9} + [alpha,beta]: 28 edges, so one edge is left over
    auto in = residual_instance(0, {}, 3);
    REQUIRE(in.g.edge_count() == 28);
    auto r = p4_decompose_two_apex(in);
    check_result(in, r);
    CHECK(r.design.blocks.size() == 9);
    CHECK(r.leftover.size() == 1);
}
