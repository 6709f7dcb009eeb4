#include "pathlink/bipartite.hpp"

#include <map>
#include <mutex>

#include "pathlink/oracle.hpp"

namespace pathlink {

namespace {

MatrixColumn rot(int i, bool barred) { return {MatrixColumn::Type::Rotation, i, barred}; }
MatrixColumn con(int i, bool barred) { return {MatrixColumn::Type::Constant, i, barred}; }

}  // namespace

int MatrixPlan::value(const MatrixColumn& c, int row) const {
    const int half = x / 2;
    if (c.type == MatrixColumn::Type::Rotation) {
        // P_i = (i, i+1, ..., x/2, 1, ..., i-1); Pbar_i = P_i + x/2.
        int v = (c.index - 1 + row - 1) % half + 1;
        return c.barred ? v + half : v;
    }
    return c.barred ? c.index + k / 2 : c.index;
}

MatrixPlan build_matrix_plan(int k, int x) {
    if (k < 4 || k % 2 != 0)
        throw UsageError("k must be even and >= 4, got " + std::to_string(k));
    if (x != k - 2 && x != k)
        throw UsageError("x must be k-2 or k, got x=" + std::to_string(x) +
                         " for k=" + std::to_string(k));
    MatrixPlan plan;
    plan.k = k;
    plan.x = x;
    if (k % 4 == 0) {
        // M    = (P_1 A_1 Pb_1 A_2 ... P_{k/4} A_{(k-2)/2} Pb_{k/4} A_{k/2})
        // Mbar = (Pb_1 Ab_1 P_1 Ab_2 ... Pb_{k/4} Ab_{(k-2)/2} P_{k/4} A_{k/2})
        for (int i = 1; i <= k / 4; ++i) {
            plan.m_columns.push_back(rot(i, false));
            plan.m_columns.push_back(con(2 * i - 1, false));
            plan.m_columns.push_back(rot(i, true));
            plan.m_columns.push_back(con(2 * i, false));
            plan.mbar_columns.push_back(rot(i, true));
            plan.mbar_columns.push_back(con(2 * i - 1, true));
            plan.mbar_columns.push_back(rot(i, false));
            // the final constant column of Mbar is unbarred A_{k/2}
            plan.mbar_columns.push_back(con(2 * i, i != k / 4));
        }
    } else {
        // k = 2 (mod 4): plans end on the half pair P_{(k+2)/4} A_{k/2}.
        for (int i = 1; i <= (k - 2) / 4; ++i) {
            plan.m_columns.push_back(rot(i, false));
            plan.m_columns.push_back(con(2 * i - 1, false));
            plan.m_columns.push_back(rot(i, true));
            plan.m_columns.push_back(con(2 * i, false));
            plan.mbar_columns.push_back(rot(i, true));
            plan.mbar_columns.push_back(con(2 * i - 1, true));
            plan.mbar_columns.push_back(rot(i, false));
            plan.mbar_columns.push_back(con(2 * i, true));
        }
        plan.m_columns.push_back(rot((k + 2) / 4, false));
        plan.m_columns.push_back(con(k / 2, false));
        plan.mbar_columns.push_back(rot((k + 2) / 4, true));
        plan.mbar_columns.push_back(con(k / 2, false));
    }
    return plan;
}

Design decompose_k_bipartite(int k, int x) {
    MatrixPlan plan = build_matrix_plan(k, x);

    Design d;
    d.host = HostDesc::bipartite(x, k - 1);  // ids 0..x-1 = part I, then part A
    d.shape = BlockShape::path(k);
    d.comments.push_back("K_{" + std::to_string(k - 1) + "," + std::to_string(x) +
                         "}: part A=a_1..a_" + std::to_string(k - 1) + " -> ids " +
                         std::to_string(x) + ".." + std::to_string(x + k - 2) +
                         ", part I=1.." + std::to_string(x) + " -> ids 0.." +
                         std::to_string(x - 1));

    auto emit = [&](const std::vector<MatrixColumn>& cols, const char* name) {
        for (int row = 1; row <= plan.rows(); ++row) {
            std::vector<Vertex> vs;
            std::string prov;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                int val = plan.value(cols[c], row);
                bool from_i = cols[c].type == MatrixColumn::Type::Rotation;
                // rows must alternate parts: odd positions from I, even from A
                if (from_i != (c % 2 == 0))
                    throw InternalError("matrix plan does not alternate parts");
                vs.push_back(from_i ? val - 1 : x + val - 1);
                prov += (c ? "," : "") + std::string(from_i ? "" : "a") + std::to_string(val);
            }
            d.comments.push_back("block " + std::to_string(d.blocks.size()) + ": " + name +
                                 " row " + std::to_string(row) + " = [" + prov + "]");
            d.blocks.emplace_back(d.shape, std::move(vs));
        }
    };
    emit(plan.m_columns, "M");
    emit(plan.mbar_columns, "Mbar");

    auto report = verify_design(d);
    if (!report.valid)
        throw InternalError("row-matrix construction failed verification for k=" +
                            std::to_string(k) + ", x=" + std::to_string(x) +
                            " (flag for manual review)");
    return d;
}

Design decompose_square_bipartite(int k) {
    if (k < 4 || k % 2 != 0)
        throw UsageError("k must be even and >= 4, got " + std::to_string(k));
    if (k > 8)
        throw NotCatalogedError("K_{" + std::to_string(k - 1) + "," + std::to_string(k - 1) +
                                "} P_" + std::to_string(k) +
                                "-decomposition is outside the oracle's range; supply an "
                                "external design file");

    static std::map<int, Design> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    auto outcome =
        find_decomposition(complete_bipartite(k - 1, k - 1), BlockShape::path(k),
                           SearchBudget{50'000'000, 300.0, 0});
    if (outcome.status != OracleStatus::Found)
        throw InternalError("no P_" + std::to_string(k) + "-decomposition of K_{" +
                            std::to_string(k - 1) + "," + std::to_string(k - 1) + "} found");
    Design d;
    d.host = HostDesc::bipartite(k - 1, k - 1);
    d.shape = BlockShape::path(k);
    d.blocks = outcome.witness->blocks;
    cache[k] = d;
    return d;
}

}  // namespace pathlink
