// Sweeps the power-speed prefactor m at beta = 1 for alpha = 0.5, rho = 1, d = 1 and
// prints the trend verdict next to the threshold prediction.

#include <cstdio>

#include <fracinv/fracinv.hpp>

int main() {
    using namespace fracinv;
    const auto th = thresholds(0.5, 1.0, 1);
    std::printf("power_lower %.4f  power_upper %.4f\n", th.power_lower, th.power_upper);
    std::printf("%8s %12s %14s %10s\n", "m", "prediction", "verdict", "slope");
    for (double m : {0.5, 1.0, 1.5, 2.5, 5.0, 10.0, 20.0}) {
        ExperimentConfig cfg;
        cfg.params = {0.5, 1.0, 1};
        cfg.profile = {ProfileKind::Power, m, 1.0};
        const auto rep = run_experiment(cfg);
        std::printf("%8.2f %12s %14s %10.4f\n", m, to_string(rep.prediction), to_string(rep.verdict),
                    rep.classifications.front().slope);
    }
}
