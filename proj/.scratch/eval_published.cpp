// Evaluate the published repair policies of the seven-state study under the
// generated uncertainty sets: worst-case cost and budget for each row.
#include <cstdio>

#include "rcmdp/bench.hpp"
#include "rcmdp/worst_case.hpp"

using namespace rcmdp;

int main() {
    const auto rows = table1_protocol();
    for (const auto& row : rows) {
        if (row.infeasible || row.repair_policy.size() == 0) continue;
        const CmdpModel model = machine_replacement_instance(row.cfg);
        const UncertaintySet uset = machine_replacement_uncertainty(row.cfg);
        StationaryPolicy f;
        f.f = Vec::Zero(model.n_sa());
        for (int s = 0; s < 7; ++s) {
            f.f[2 * s + 1] = row.repair_policy[s];
            f.f[2 * s] = 1.0 - row.repair_policy[s];
        }
        try {
            const WorstCaseResult wc = worst_case_costs(model, uset, f, RobustForm::Pmin);
            std::printf("sigma=%.2f y=%s  published %s%.4f  ours: C=%.4f D=%.4f %s\n",
                        row.cfg.sigma, row.cfg.y ? std::to_string(*row.cfg.y).substr(0, 4).c_str() : "-",
                        row.optimal_value ? "z*=" : "ub=", row.optimal_value ? *row.optimal_value : row.ub,
                        wc.c_worst, wc.d_worst[0], wc.d_worst[0] <= 170.0 + 1e-6 ? "feasible" : "VIOLATES");
        } catch (const std::exception& e) {
            std::printf("sigma=%.2f: inner solve failed: %s\n", row.cfg.sigma, e.what());
        }
    }
    return 0;
}
