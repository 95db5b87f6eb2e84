#include <rcmdp/bnb.hpp>
#include <rcmdp/model.hpp>
#include <rcmdp/uncertainty.hpp>
#include <rcmdp/worst_case.hpp>
#include <cstdio>
using namespace rcmdp;

CmdpModel make_model(double xi1) {
    std::vector<std::vector<std::string>> actions{{"a", "b"}, {"a"}};
    Vec gamma = (Vec(2) << 0.5, 0.5).finished();
    Kernel p_bar{(Vec(2) << 0.5, 0.5).finished(), (Vec(2) << 0.9, 0.1).finished(),
                 (Vec(2) << 0.3, 0.7).finished()};
    Vec c = (Vec(3) << 1.0, 0.5, 2.0).finished();
    std::vector<Vec> d{(Vec(3) << 0.2, 1.5, 0.5).finished()};
    return CmdpModel(actions, gamma, 0.5, p_bar, c, d, (Vec(1) << xi1).finished());
}

UncertaintySet make_uset() {
    UncertaintySet uset;
    UncertaintyBlock blk;
    blk.state = 0;
    blk.dim = 4;
    blk.B = Mat(12, 4);
    blk.b = Vec(12);
    int r = 0;
    for (int a = 0; a < 2; ++a)
        for (double sgn : {1.0, -1.0}) {
            blk.B.row(r).setZero();
            blk.B(r, a * 2 + 0) = sgn;
            blk.B(r, a * 2 + 1) = sgn;
            blk.b(r++) = 0.0;
        }
    for (int j = 0; j < 4; ++j)
        for (double sgn : {1.0, -1.0}) {
            blk.B.row(r).setZero();
            blk.B(r, j) = sgn;
            blk.b(r++) = 0.05;
        }
    blk.soc = SocBlock{Mat::Identity(4, 4), Vec::Zero(4), Vec::Zero(4), 0.08};
    uset.blocks.push_back(blk);
    UncertaintyBlock pin;
    pin.state = 1;
    pin.dim = 2;
    pin.B = Mat(6, 2);
    pin.B << 1, 1, -1, -1, 1, 0, -1, 0, 0, 1, 0, -1;
    pin.b = Vec::Zero(6);
    uset.blocks.push_back(pin);
    return uset;
}

int main() {
    CmdpModel model = make_model(5.0);
    UncertaintySet uset = make_uset();

    auto nom = solve_nominal(model);
    std::printf("nominal: %s value=%.6f policy=(%.4f,%.4f,%.4f)\n", to_string(nom.status),
                nom.value, nom.policy.f(0), nom.policy.f(1), nom.policy.f(2));
    std::fflush(stdout);

    try {
        auto wc = worst_case_costs(model, uset, nom.policy, RobustForm::Standard);
        std::printf("wc at nominal: C=%.6f D=%.6f\n", wc.c_worst, wc.d_worst(0));
    } catch (const std::exception& e) {
        std::printf("wc at nominal THREW: %s\n", e.what());
    }
    std::fflush(stdout);

    try {
        StationaryPolicy unif{(Vec(3) << 0.5, 0.5, 1.0).finished()};
        auto wc = worst_case_costs(model, uset, unif, RobustForm::Standard);
        std::printf("wc at uniform: C=%.6f D=%.6f\n", wc.c_worst, wc.d_worst(0));
    } catch (const std::exception& e) {
        std::printf("wc at uniform THREW: %s\n", e.what());
    }
    std::fflush(stdout);

    RobustSolveOptions opt;
    opt.gap_target = 1e-3;
    opt.time_limit_sec = 30.0;
    opt.verbose = true;
    auto rep = solve_robust_global(model, uset, RobustForm::Standard, opt);
    std::printf("rep: %s lb=%.6f ub=%.6f nodes=%ld time=%.2f\n", to_string(rep.status),
                rep.lower_bound, rep.upper_bound, rep.nodes, rep.wall_time_sec);
    return 0;
}
