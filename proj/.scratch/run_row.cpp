// Timing driver: any row of the seven-state grid through the global solver.
// args: sigma [y|-] [time_limit] [gap_target]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "rcmdp/bench.hpp"
#include "rcmdp/bnb.hpp"

using namespace rcmdp;

int main(int argc, char** argv) {
    MachineReplacementConfig cfg;
    cfg.sigma = argc > 1 ? std::atof(argv[1]) : 0.01;
    if (argc > 2 && std::strcmp(argv[2], "-") != 0) cfg.y = std::atof(argv[2]);
    cfg.blocks.norm_balls = cfg.y.has_value();
    const CmdpModel model = machine_replacement_instance(cfg);
    const UncertaintySet uset = machine_replacement_uncertainty(cfg);

    RobustSolveOptions opt;
    opt.time_limit_sec = argc > 3 ? std::atof(argv[3]) : 300.0;
    opt.gap_target = argc > 4 ? std::atof(argv[4]) : 1e-2;
    opt.verbose = true;

    const auto t0 = std::chrono::steady_clock::now();
    const RobustSolveReport rep = solve_robust_global(model, uset, RobustForm::Pmin, opt);
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::printf("status=%s lb=%.6f ub=%.6f gap%%=%.4f nodes=%lld time=%.2fs kappa_esc=%d\n",
                to_string(rep.status), rep.lower_bound, rep.upper_bound, rep.gap_percent,
                static_cast<long long>(rep.nodes), dt, rep.kappa_escalations);
    if (rep.policy.f.size() > 0) {
        const Vec pr = repair_probabilities(model, rep.policy);
        std::printf("repair: ");
        for (int s = 0; s < pr.size(); ++s) std::printf("%.4f ", pr[s]);
        std::printf("\nc_worst=%.6f d_worst=%.6f\n", rep.c_worst, rep.d_worst.size() ? rep.d_worst[0] : -1.0);
    }
    if (rep.infeasibility_proven) std::printf("infeasibility proven, phase1_lower=%.6f\n", rep.phase1_lower);
    return 0;
}
