// Timing driver: first row of the seven-state study through the global solver.
#include <chrono>
#include <cstdio>

#include "rcmdp/bench.hpp"
#include "rcmdp/bnb.hpp"

using namespace rcmdp;

int main(int argc, char** argv) {
    MachineReplacementConfig cfg;
    cfg.blocks.middle_intervals = false;
    cfg.blocks.scaled_boxes = false;
    cfg.blocks.norm_balls = false;
    const CmdpModel model = machine_replacement_instance(cfg);
    const UncertaintySet uset = machine_replacement_uncertainty(cfg);

    RobustSolveOptions opt;
    opt.gap_target = 1e-3;
    opt.time_limit_sec = argc > 1 ? std::atof(argv[1]) : 300.0;
    opt.verbose = true;

    const auto t0 = std::chrono::steady_clock::now();
    const RobustSolveReport rep = solve_robust_global(model, uset, RobustForm::Pmin, opt);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::printf("status=%s lb=%.6f ub=%.6f gap%%=%.4f nodes=%lld time=%.2fs\n",
                to_string(rep.status), rep.lower_bound, rep.upper_bound, rep.gap_percent,
                static_cast<long long>(rep.nodes), dt);
    if (rep.policy.f.size() > 0) {
        const Vec pr = repair_probabilities(model, rep.policy);
        std::printf("repair: ");
        for (int s = 0; s < pr.size(); ++s) std::printf("%.4f ", pr[s]);
        std::printf("\nc_worst=%.6f d_worst=%.6f\n", rep.c_worst, rep.d_worst.size() ? rep.d_worst[0] : -1.0);
    }
    std::printf("target: 84.9511, repair (0.7649, 0, 1, 1, 1, 1, 1)\n");
    return 0;
}
