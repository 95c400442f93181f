// Radial profiles of u(t, r) at t = 10, alpha = 0.5: Gaussian and Cauchy routes exactly,
// a general stable order through its envelope, and the sign-changing rho = 1.5 kernel.

#include <cstdio>

#include <fracinv/fracinv.hpp>

int main() {
    using namespace fracinv;
    const double alpha = 0.5, t = 10.0;
    std::printf("log E_alpha(t^alpha) = %.6f\n", total_mass(alpha, t).log_abs);
    std::printf("%6s %14s %14s %14s %14s %14s\n", "r", "rho=1", "rho=0.5", "env_lo(0.75)", "env_up(0.75)",
                "rho=1.5");
    for (double r : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0}) {
        const auto g = subordinate(alpha, 1.0, 1, t, r);
        const auto c = subordinate(alpha, 0.5, 1, t, r);
        const auto env = subordinate_envelope(alpha, 0.75, 1, t, r);
        const auto h = subordinate(alpha, 1.5, 1, t, r);
        std::printf("%6.1f %14.6f %14.6f %14.6f %14.6f %+d:%12.6f\n", r, g.log_abs, c.log_abs, env.lower.log_abs,
                    env.upper.log_abs, h.sign_int(), h.log_abs);
    }
}
