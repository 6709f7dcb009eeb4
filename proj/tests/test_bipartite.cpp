#include "doctest.h"

#include <set>

#include "pathlink/bipartite.hpp"
#include "pathlink/oracle.hpp"

using namespace pathlink;

TEST_CASE("k=4, x=4 reproduces the two quoted rows") {
    auto d = decompose_k_bipartite(4, 4);
    REQUIRE(verify_design(d).valid);
    CHECK(d.blocks.size() == 4);
    // paper indexing [1,a_1,3,a_2] -> ids [0,4,2,5]; [3,a_3,1,a_2] -> [2,6,0,5]
    std::set<Block> blocks(d.blocks.begin(), d.blocks.end());
    CHECK(blocks.count(Block(BlockShape::path(4), {0, 4, 2, 5})));
    CHECK(blocks.count(Block(BlockShape::path(4), {2, 6, 0, 5})));
}

TEST_CASE("k=4, x=2 gives two blocks over the six edges") {
    auto d = decompose_k_bipartite(4, 2);
    REQUIRE(verify_design(d).valid);
    CHECK(d.blocks.size() == 2);
    CHECK(d.host_graph().edge_count() == 6);
}

TEST_CASE("k=6, x=6 uses the half-pair plan") {
    auto plan = build_matrix_plan(6, 6);
    // k=2 (mod 4): M ends on ... P_{(k+2)/4} A_{k/2}
    CHECK(plan.m_columns.size() == 6);
    CHECK(plan.m_columns[4].type == MatrixColumn::Type::Rotation);
    CHECK(plan.m_columns[4].index == 2);
    CHECK(!plan.m_columns[4].barred);
    CHECK(plan.mbar_columns[4].barred);
    CHECK(plan.m_columns[5].index == 3);

    auto d = decompose_k_bipartite(6, 6);
    REQUIRE(verify_design(d).valid);
    CHECK(d.blocks.size() == 6);
    CHECK(d.host_graph().edge_count() == 30);
}

TEST_CASE("column-plan parity by congruence class of k") {
    auto p8 = build_matrix_plan(8, 8);
    int rot_pairs = 0;
    for (std::size_t i = 0; i + 1 < p8.m_columns.size(); ++i)
        if (p8.m_columns[i].type == MatrixColumn::Type::Rotation &&
            !p8.m_columns[i].barred)
            ++rot_pairs;
    CHECK(rot_pairs == 2);  // k/4 (P, Pbar) pairs
    CHECK(p8.m_columns.size() == 8);
    // final Mbar constant column is unbarred A_{k/2} exactly as printed
    CHECK(p8.mbar_columns.back().type == MatrixColumn::Type::Constant);
    CHECK(!p8.mbar_columns.back().barred);
    CHECK(p8.mbar_columns.back().index == 4);
}

TEST_CASE("quantified: all even k in [4,16], x in {k-2,k}") {
    for (int k = 4; k <= 16; k += 2) {
        for (int x : {k - 2, k}) {
            auto d = decompose_k_bipartite(k, x);
            CHECK(verify_design(d).valid);
            CHECK(static_cast<int>(d.blocks.size()) == x);
        }
    }
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(decompose_k_bipartite(5, 4), UsageError);
    CHECK_THROWS_AS(decompose_k_bipartite(6, 3), UsageError);
    CHECK_THROWS_AS(decompose_k_bipartite(2, 2), UsageError);
}

TEST_CASE("square bipartite designs via the oracle") {
    auto d4 = decompose_square_bipartite(4);
    REQUIRE(verify_design(d4).valid);
    CHECK(d4.blocks.size() == 3);

    auto d6 = decompose_square_bipartite(6);
    REQUIRE(verify_design(d6).valid);
    CHECK(d6.blocks.size() == 5);
    CHECK(d6.host_graph().edge_count() == 25);

    CHECK_THROWS_AS(decompose_square_bipartite(10), NotCatalogedError);
}
