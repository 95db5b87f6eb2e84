#include <rcmdp/bnb.hpp>
#include <rcmdp/model.hpp>
#include <rcmdp/uncertainty.hpp>
#include <rcmdp/worst_case.hpp>
#include <cmath>
#include <cstdio>
using namespace rcmdp;

namespace {

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
    for (int a = 0; a < 2; ++a) {
        for (double sgn : {1.0, -1.0}) {
            blk.B.row(r).setZero();
            blk.B(r, a * 2 + 0) = sgn;
            blk.B(r, a * 2 + 1) = sgn;
            blk.b(r++) = 0.0;
        }
    }
    for (int j = 0; j < 4; ++j) {
        for (double sgn : {1.0, -1.0}) {
            blk.B.row(r).setZero();
            blk.B(r, j) = sgn;
            blk.b(r++) = 0.05;
        }
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

UncertaintySet make_zero_uset() {
    UncertaintySet uset;
    for (int s = 0; s < 2; ++s) {
        UncertaintyBlock pin;
        pin.state = s;
        pin.dim = s == 0 ? 4 : 2;
        const int na = s == 0 ? 2 : 1;
        const int n = pin.dim / na;
        pin.B = Mat(2 * na + 2 * pin.dim, pin.dim);
        pin.B.setZero();
        int r = 0;
        for (int a = 0; a < na; ++a) {
            for (double sgn : {1.0, -1.0}) {
                for (int j = 0; j < n; ++j) pin.B(r, a * n + j) = sgn;
                ++r;
            }
        }
        for (int j = 0; j < pin.dim; ++j) {
            pin.B(r++, j) = 1.0;
            pin.B(r++, j) = -1.0;
        }
        pin.b = Vec::Zero(2 * na + 2 * pin.dim);
        uset.blocks.push_back(pin);
    }
    return uset;
}

// Policy space is one-dimensional (p = probability of action a in state 0);
// scan it and keep the best worst-case-feasible value.
struct GridTruth {
    double value = std::numeric_limits<double>::infinity();
    double p = -1.0;
    double min_d = std::numeric_limits<double>::infinity();
};

GridTruth grid_oracle(const CmdpModel& model, const UncertaintySet& uset, int points) {
    GridTruth out;
    for (int i = 0; i <= points; ++i) {
        const double p = static_cast<double>(i) / points;
        StationaryPolicy f{(Vec(3) << p, 1.0 - p, 1.0).finished()};
        const auto wc = worst_case_costs(model, uset, f, RobustForm::Standard);
        out.min_d = std::min(out.min_d, wc.d_worst(0));
        if (wc.d_worst(0) <= model.xi()(0) + 1e-9 && wc.c_worst < out.value) {
            out.value = wc.c_worst;
            out.p = p;
        }
    }
    return out;
}

}  // namespace

int main() {
    int fails = 0;
    auto check = [&](bool ok, const char* what) {
        std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
        if (!ok) ++fails;
    };
    RobustSolveOptions opt;
    opt.gap_target = 1e-3;
    opt.time_limit_sec = 120.0;

    // Loose budget: constraint inactive.
    {
        CmdpModel model = make_model(5.0);
        UncertaintySet uset = make_uset();
        const GridTruth truth = grid_oracle(model, uset, 400);
        const auto rep = solve_robust_global(model, uset, RobustForm::Standard, opt);
        std::printf("[loose] truth=%.6f@p=%.4f  rep=%s lb=%.6f ub=%.6f gap=%.4f%% nodes=%ld %.2fs\n",
                    truth.value, truth.p, to_string(rep.status), rep.lower_bound, rep.upper_bound,
                    rep.gap_percent, rep.nodes, rep.wall_time_sec);
        check(rep.status == RobustStatus::Optimal, "loose: optimal status");
        check(rep.upper_bound <= truth.value + 1e-5, "loose: ub at most grid truth");
        check(rep.lower_bound <= truth.value + 1e-6, "loose: lb below grid truth");
        check(rep.gap_percent <= 0.1 + 1e-9, "loose: gap within target");
        check(std::abs(rep.policy.f(0) - truth.p) < 2e-2, "loose: policy near grid argmin");
        check(!rep.certificates.empty(), "loose: certificates attached");
    }

    // Binding budget: the constraint shapes the optimum.
    {
        CmdpModel model = make_model(0.78);
        UncertaintySet uset = make_uset();
        const GridTruth truth = grid_oracle(model, uset, 400);
        const auto rep = solve_robust_global(model, uset, RobustForm::Standard, opt);
        std::printf("[tight] truth=%.6f@p=%.4f min_d=%.6f rep=%s lb=%.6f ub=%.6f nodes=%ld\n",
                    truth.value, truth.p, truth.min_d, to_string(rep.status), rep.lower_bound,
                    rep.upper_bound, rep.nodes);
        check(rep.status == RobustStatus::Optimal, "tight: optimal status");
        check(rep.upper_bound <= truth.value + 1e-5, "tight: ub at most grid truth");
        check(rep.lower_bound <= truth.value + 1e-6, "tight: lb below grid truth");
        check(rep.d_worst(0) <= 0.78 + 1e-6, "tight: worst-case budget met");
    }

    // Impossible budget: every policy violates it in the worst case.
    {
        CmdpModel model = make_model(0.2);
        UncertaintySet uset = make_uset();
        const GridTruth truth = grid_oracle(model, uset, 200);
        const auto rep = solve_robust_global(model, uset, RobustForm::Standard, opt);
        std::printf("[infeas] min_d=%.6f rep=%s phase1_lower=%.6f proven=%d nodes=%ld\n",
                    truth.min_d, to_string(rep.status), rep.phase1_lower,
                    rep.infeasibility_proven, rep.nodes);
        check(truth.min_d > 0.2, "infeas: grid confirms no feasible policy");
        check(rep.status == RobustStatus::Infeasible, "infeas: status");
        check(rep.infeasibility_proven && rep.phase1_lower > 1e-6, "infeas: positive proof bound");
        check(rep.phase1_lower <= truth.min_d - 0.2 + 1e-5, "infeas: proof bound below true excess");
    }

    // Zero uncertainty: robust equals nominal.
    {
        CmdpModel model = make_model(5.0);
        UncertaintySet zero = make_zero_uset();
        const auto nom = solve_nominal(model);
        const auto rep = solve_robust_global(model, zero, RobustForm::Standard, opt);
        std::printf("[zero] nominal=%.8f robust ub=%.8f lb=%.8f nodes=%ld\n", nom.value,
                    rep.upper_bound, rep.lower_bound, rep.nodes);
        check(rep.status == RobustStatus::Optimal, "zero: optimal status");
        check(std::abs(rep.upper_bound - nom.value) <= 1e-5 * (1.0 + std::abs(nom.value)),
              "zero: robust value equals nominal");
    }

    // Pmin form agrees with the standard form.
    {
        CmdpModel model = make_model(5.0);
        UncertaintySet uset = make_uset();
        const auto rep_std = solve_robust_global(model, uset, RobustForm::Standard, opt);
        const auto rep_pmin = solve_robust_global(model, uset, RobustForm::Pmin, opt);
        std::printf("[pmin] std=%.8f pmin=%.8f\n", rep_std.upper_bound, rep_pmin.upper_bound);
        check(std::abs(rep_std.upper_bound - rep_pmin.upper_bound) <=
                  1e-4 * (1.0 + std::abs(rep_std.upper_bound)),
              "pmin: forms agree");
    }

    std::printf(fails ? "SMOKE FAILED (%d)\n" : "SMOKE PASSED\n", fails);
    return fails ? 1 : 0;
}
