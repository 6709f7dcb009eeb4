#pragma once

#include "pathlink/graph.hpp"

namespace pathlink {

// Column plan for the K_{k-1,x} row-matrix construction. Columns alternate
// rotation-vector columns P_i / Pbar_i with constant columns A_i / Abar_i;
// the exact interleaving depends on k mod 4. Indices are 1-based.
struct MatrixColumn {
    enum class Type { Rotation, Constant };
    Type type;
    int index;    // i of P_i or A_i
    bool barred;  // Pbar_i = P_i + x/2, Abar_i = a_{i + k/2}
};

struct MatrixPlan {
    int k = 0;
    int x = 0;
    std::vector<MatrixColumn> m_columns;
    std::vector<MatrixColumn> mbar_columns;

    int rows() const { return x / 2; }
    // Value of the column in row j (1-based): an I-element 1..x for
    // rotation columns, an A-index 1..k-1 for constant columns.
    int value(const MatrixColumn& c, int row) const;
};

MatrixPlan build_matrix_plan(int k, int x);

// P_k-decomposition of K_{k-1,x} for even k and x in {k-2, k}, with
// exactly x blocks. Part I = {1..x} is mapped to ids 0..x-1 and part
// A = {a_1..a_{k-1}} to ids x..x+k-2.
Design decompose_k_bipartite(int k, int x);

// P_k-decomposition of K_{k-1,k-1} with k-1 blocks. Produced by oracle
// search for k <= 8 and memoized; larger k must supply an external design.
Design decompose_square_bipartite(int k);

}  // namespace pathlink
