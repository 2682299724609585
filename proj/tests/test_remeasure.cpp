#include "support.hpp"

#include <achaos/calculus.hpp>
#include <achaos/remeasure.hpp>
#include <achaos/transforms.hpp>

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace achaos;
using namespace achaos::testing;

namespace
{

MeasurePtr shifted_gaussian(double mean)
{
    return density_measure_1d(std::make_shared<NormalMixtureDensity>(std::vector<NormalComponent>{{1.0, mean, 1.0}}),
                              mean - 14.0, mean + 14.0);
}

MeasurePtr mixture()
{
    return density_measure_1d(std::make_shared<NormalMixtureDensity>(
                                  std::vector<NormalComponent>{{0.3, -1.0, 0.7}, {0.7, 0.5, 1.1}}),
                              -14.0, 14.0);
}

} // namespace

TEST_SUITE("remeasure")
{
    TEST_CASE("cross expansion reduces to the identity for one measure")
    {
        const auto sys = build_appell(gaussian_measure(1), 8);
        for (int n = 0; n <= 8; ++n) {
            for (double x : {-1.3, 0.0, 0.4, 2.0}) {
                CHECK(cross_expand_residual(sys, sys, n, cvector{x}) < 1e-12 * std::max(1.0, std::pow(std::abs(x) + 1.0, n)));
            }
        }
        const auto e0 = p_cross_expand(sys, sys, 0);
        REQUIRE(e0.terms.size() == 1);
        CHECK(e0.terms[0].coefficient == 1.0);
        CHECK(e0.terms[0].kernel.coeffs()[0] == complex(1.0));
        CHECK(p_cross_expand(sys, sys, 3).terms.size() == 10);
    }

    TEST_CASE("cross expansion between Gaussian and shifted Gaussian")
    {
        const auto sys = build_appell(gaussian_measure(1), 8);
        const auto hat = build_appell(shifted_gaussian(0.5), 8);
        for (int n = 0; n <= 6; ++n) {
            for (double x : {-1.0, 0.0, 2.0}) {
                const double scale = std::max(1.0, std::abs(hermite_he(n, x)));
                CHECK(cross_expand_residual(sys, hat, n, cvector{x}) < 1e-10 * scale);
                // and the other way round
                CHECK(cross_expand_residual(hat, sys, n, cvector{x}) < 1e-10 * std::max(1.0, std::pow(3.0, n)));
            }
        }
        // the shifted Appell polynomials are He_n(x - 1/2)
        for (int n = 0; n <= 6; ++n) {
            CHECK(std::abs(p_kernel(hat, n, cvector{1.7}).coeffs()[0] - hermite_he(n, 1.2)) < 1e-9);
        }
        CHECK_THROWS_AS(p_cross_expand(sys, hat, 9), std::out_of_range);
        CHECK_THROWS_AS(p_cross_expand(sys, build_appell(gaussian_measure(2), 4), 2), std::invalid_argument);
    }

    TEST_CASE("retarget_test")
    {
        const auto sys = build_appell(gaussian_measure(1), 8);
        std::mt19937_64 rng(61);
        const auto phi = random_sequence(rng, 1, 8, Basis::appell_p, sys.measure_id(), false);
        CHECK(max_abs_diff(retarget_test(phi, sys, sys), phi) < 1e-12);

        // P_2 of the Gaussian is x^2 - 1, whatever basis it is written in
        const auto mix = build_appell(mixture(), 8);
        const auto P2 = KernelSequence::single(SymKernel::tensor_power(cvector{1.0}, 2), 2, Basis::appell_p,
                                               sys.measure_id());
        const auto hat = retarget_test(P2, sys, mix);
        CHECK(hat.measure_id == mix.measure_id());
        for (int trial = 0; trial < 20; ++trial) {
            const double x = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
            CHECK(std::abs(eval_test(mix, hat, cvector{x}) - (x * x - 1.0)) < 1e-10);
        }

        for (const auto &target : {shifted_gaussian(-0.3), mixture()}) {
            const auto s_hat = build_appell(target, 8);
            for (int trial = 0; trial < 10; ++trial) {
                const auto f = random_sequence(rng, 1, 8, Basis::appell_p, sys.measure_id());
                const auto g = retarget_test(f, sys, s_hat);
                for (double x : {-2.0, -0.5, 0.0, 1.1, 2.5}) {
                    const complex a = eval_test(sys, f, cvector{x});
                    CHECK(std::abs(eval_test(s_hat, g, cvector{x}) - a) < 1e-9 * std::max(1.0, std::abs(a)));
                }
                // polynomials of degree N are represented exactly on both sides
                CHECK(max_abs_diff(retarget_test(g, s_hat, sys), f) < 1e-9);
            }
        }
        CHECK_THROWS_AS(retarget_test(phi, mix, sys), std::invalid_argument);
        CHECK_THROWS_AS(retarget_test(phi, sys, build_appell(mixture(), 4)), std::out_of_range);
    }

    TEST_CASE("retarget_dist")
    {
        const auto sys = build_appell(gaussian_measure(1), 8);
        const auto mix = build_appell(mixture(), 8);
        const auto unit_hat = KernelSequence::constant(1, 0, Basis::appell_q, mix.measure_id(), 1.0);
        const auto unit = retarget_dist(unit_hat, sys, mix);
        CHECK(unit.measure_id == sys.measure_id());
        CHECK(unit.N() == 0);
        CHECK(std::abs(unit[0].coeffs()[0] - 1.0) < 1e-15);

        std::mt19937_64 rng(62);
        // delta_z is the same functional in both expansions
        for (double z : {-1.5, 0.3, 2.0}) {
            const auto d_hat = delta(mix, cvector{z});
            const auto d = retarget_dist(d_hat, sys, mix);
            CHECK(max_abs_diff(d, delta(sys, cvector{z})) < 1e-9 * std::pow(1.0 + std::abs(z), 8));
        }

        for (const auto &target : {shifted_gaussian(0.5), mixture()}) {
            const auto s_hat = build_appell(target, 8);
            double worst = 0.0;
            for (int trial = 0; trial < 25; ++trial) {
                const auto Phi_hat = random_sequence(rng, 1, 8, Basis::appell_q, s_hat.measure_id(), false);
                const auto phi = random_sequence(rng, 1, 8, Basis::appell_p, sys.measure_id(), false);
                const auto Phi = retarget_dist(Phi_hat, sys, s_hat);
                const auto phi_hat = retarget_test(phi, sys, s_hat);
                const complex a = pair(Phi, phi);
                const complex b = pair(Phi_hat, phi_hat);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
                // round trip back through mu
                const auto back = retarget_dist(Phi, s_hat, sys);
                CHECK(max_abs_diff(back, Phi_hat) < 1e-9);
            }
            CHECK(worst < 1e-9);
        }
        CHECK_THROWS_AS(retarget_dist(delta(sys, cvector{0.0}), sys, mix), std::invalid_argument);
    }
}
