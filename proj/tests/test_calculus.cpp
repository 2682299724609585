#include "support.hpp"

#include <achaos/calculus.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace achaos;
using namespace achaos::testing;

namespace
{

MeasurePtr normal_grid_measure()
{
    return density_measure_1d(std::make_shared<NormalMixtureDensity>(std::vector<NormalComponent>{{1.0, 0.0, 1.0}}),
                              -12.0, 12.0);
}

MeasurePtr mixture_grid_measure()
{
    return density_measure_1d(std::make_shared<NormalMixtureDensity>(
                                  std::vector<NormalComponent>{{0.4, -0.8, 0.9}, {0.6, 0.6, 1.2}}),
                              -14.0, 14.0);
}

} // namespace

TEST_SUITE("calculus")
{
    TEST_CASE("pair worked examples")
    {
        const std::string id = "m";
        const auto q0 = KernelSequence::constant(1, 3, Basis::appell_q, id, 1.0);
        const auto p0 = KernelSequence::constant(1, 3, Basis::appell_p, id, 1.0);
        CHECK(pair(q0, p0) == complex(1.0));

        const auto u = SymKernel::unit(2, 0);
        const auto Q2 = KernelSequence::single(sym_product(u, u), 4, Basis::appell_q, id);
        const auto P3 = KernelSequence::single(sym_product(u, sym_product(u, u)), 4, Basis::appell_p, id);
        CHECK(pair(Q2, P3) == complex(0.0));

        auto a = KernelSequence::zero(1, 2, Basis::appell_q, id);
        auto b = KernelSequence::zero(1, 2, Basis::appell_p, id);
        a[2].coeffs()[0] = 1.5;
        b[2].coeffs()[0] = -2.0;
        CHECK(pair(a, b) == complex(2.0 * 1.5 * -2.0));

        CHECK_THROWS_AS(pair(p0, q0), std::invalid_argument);
        CHECK_THROWS_AS(pair(q0, KernelSequence::constant(1, 3, Basis::appell_p, "other", 1.0)),
                        std::invalid_argument);
    }

    TEST_CASE("biorthogonality on coefficients")
    {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 50; ++trial) {
            const int d = 1 + static_cast<int>(rng() % 2);
            const int n = static_cast<int>(rng() % 7);
            const int m = static_cast<int>(rng() % 7);
            const auto Phi = random_kernel(rng, d, n);
            const auto phi = random_kernel(rng, d, m);
            const auto Q = KernelSequence::single(Phi, 6, Basis::appell_q, "mu");
            const auto P = KernelSequence::single(phi, 6, Basis::appell_p, "mu");
            const complex expect = n == m ? factorial(n) * pairing(Phi, phi) : complex{};
            CHECK(pair(Q, P) == expect);
        }
    }

    TEST_CASE("Q_n from density derivatives")
    {
        const auto mu = normal_grid_measure();
        for (int n = 0; n <= 6; ++n) {
            for (double x = -3.0; x <= 3.0; x += 0.5) {
                const double h = std::pow(2.0, -0.5 * n) * hermite_h(n, x / std::numbers::sqrt2);
                CHECK(std::abs(q_density_eval(*mu, n, x) - h) < 1e-9 * std::max(1.0, std::abs(h)));
            }
        }
        CHECK_THROWS_AS(q_density_eval(*gaussian_measure(1), 1, 0.0), std::invalid_argument);
        const auto grid = density_measure_1d(
            std::make_shared<GridDensity>(std::vector<double>{-1.0, 0.0, 1.0}, std::vector<double>{0.0, 1.0, 0.0}),
            -1.0, 1.0);
        CHECK_THROWS_AS(q_density_eval(*grid, 1, 0.2), std::domain_error);
    }

    TEST_CASE("pair_oracle realizes the pairing by quadrature")
    {
        const auto mu = normal_grid_measure();
        const auto sys = build_appell(mu, 6);
        const auto Q1 = KernelSequence::single(SymKernel::vector(cvector{1.0}), 1, Basis::appell_q, mu->id());
        const auto P1 = KernelSequence::single(SymKernel::vector(cvector{1.0}), 1, Basis::appell_p, mu->id());
        CHECK(std::abs(pair_oracle(Q1, P1, sys) - 1.0) < 1e-7);

        std::mt19937_64 rng(32);
        for (const auto &m : {mu, mixture_grid_measure()}) {
            const auto s = build_appell(m, 6);
            for (int trial = 0; trial < 25; ++trial) {
                const int N = static_cast<int>(rng() % 7);
                const auto Phi = random_sequence(rng, 1, N, Basis::appell_q, m->id());
                const auto phi = random_sequence(rng, 1, N, Basis::appell_p, m->id());
                CHECK(std::abs(pair(Phi, phi) - pair_oracle(Phi, phi, s)) < 1e-7);
            }
        }
        CHECK_THROWS_AS(pair_oracle(Q1, P1, build_appell(gaussian_measure(1), 2)), std::invalid_argument);
    }

    TEST_CASE("norm worked examples")
    {
        const auto w = WeightModel::uniform(1, 2.0);
        const auto c = KernelSequence::constant(1, 4, Basis::appell_p, "m", complex(0.0, -3.0));
        for (int p = 0; p <= 2; ++p) {
            for (int q = 0; q <= 2; ++q) {
                CHECK(test_norm(c, p, q, w) == doctest::Approx(3.0));
                auto cq = c;
                cq.basis = Basis::appell_q;
                CHECK(dist_norm(cq, p, q, 0.5, w) == doctest::Approx(3.0));
            }
        }
        const auto e1 = KernelSequence::single(SymKernel::unit(1, 0), 3, Basis::appell_p, "m");
        CHECK(test_norm(e1, 1, 2, w) == doctest::Approx(4.0));

        auto f = KernelSequence::zero(1, 3, Basis::monomial);
        CHECK(e_norm(f, 1, 1, 0.0, w) == 0.0);
        f[2].coeffs()[0] = 1.0;
        CHECK(e_norm(f, 0, 1, 0.0, w) == doctest::Approx(std::sqrt(8.0)));
        // beta = 1 has the shape of the test norm
        auto fp = f;
        fp.basis = Basis::appell_p;
        fp.measure_id = "m";
        CHECK(e_norm(f, 1, 2, 1.0, w) == doctest::Approx(test_norm(fp, 1, 2, w)));

        CHECK_THROWS_AS(dist_norm(KernelSequence::constant(1, 1, Basis::appell_q, "m", 1.0), 0, 0, 1.5, w),
                        std::invalid_argument);
    }

    TEST_CASE("norm of delta_0 decreases in q")
    {
        const auto sys = build_appell(gaussian_measure(1), 12);
        auto delta0 = KernelSequence::zero(1, 12, Basis::appell_q, sys.measure_id());
        for (int n = 0; n <= 12; ++n) {
            delta0[n] = sys.B(n) * (1.0 / factorial(n));
        }
        const auto &w = sys.measure().weights();
        double prev = dist_norm(delta0, 0, 0, 1.0, w);
        for (int q = 1; q <= 6; ++q) {
            const double v = dist_norm(delta0, 0, q, 1.0, w);
            CHECK(v < prev);
            prev = v;
        }
        const complex c(0.5, 2.0);
        auto scaled = delta0;
        for (auto &k : scaled.kernels) {
            k *= c;
        }
        CHECK(dist_norm(scaled, 1, 2, 0.3, w) == doctest::Approx(std::abs(c) * dist_norm(delta0, 1, 2, 0.3, w)));
    }

    TEST_CASE("mu-exponential norms")
    {
        const auto sys = build_appell(gaussian_measure(2), 10);
        const auto &w = sys.measure().weights();
        const cvector theta{0.3, -0.4};
        const auto e = mu_exponential(sys, theta, 10);
        for (int p = 0; p <= 2; ++p) {
            for (int q = 0; q <= 3; ++q) {
                const double t = weighted_norm(SymKernel::vector(theta), p, w);
                double expect = 0.0;
                for (int n = 0; n <= 10; ++n) {
                    expect += std::exp2(n * q) * std::pow(t, 2 * n);
                }
                const double got = test_norm(e, p, q, w);
                CHECK(std::abs(got * got - expect) <= 1e-13 * expect);
            }
        }
        // eval_test of the exponential is the truncated normalized exponential
        const cvector x{0.5, 1.0};
        const auto ev = emu_eval(sys, theta, x);
        CHECK(std::abs(eval_test(sys, e, x) - ev.series) < 1e-13);
    }

    TEST_CASE("norm monotonicity and duality on random sequences")
    {
        std::mt19937_64 rng(33);
        for (int trial = 0; trial < 60; ++trial) {
            const int d = 1 + static_cast<int>(rng() % 2);
            std::vector<double> lam;
            for (int i = 0; i < d; ++i) {
                lam.push_back(1.0 + std::uniform_real_distribution<double>(0.0, 2.0)(rng));
            }
            const WeightModel w(lam);
            const int N = static_cast<int>(rng() % 7);
            const auto phi = random_sequence(rng, d, N, Basis::appell_p, "m", false);
            const auto Phi = random_sequence(rng, d, N, Basis::appell_q, "m", false);
            auto f = phi;
            f.basis = Basis::monomial;
            f.measure_id.clear();
            for (int p = 0; p <= 2; ++p) {
                for (int q = 0; q <= 2; ++q) {
                    const double t = test_norm(phi, p, q, w);
                    CHECK(t <= test_norm(phi, p + 1, q, w) * (1 + 1e-14));
                    CHECK(t <= test_norm(phi, p, q + 1, w) * (1 + 1e-14));
                    const double s = dist_norm(Phi, p, q, 1.0, w);
                    CHECK(dist_norm(Phi, p + 1, q, 1.0, w) <= s * (1 + 1e-14));
                    CHECK(dist_norm(Phi, p, q + 1, 1.0, w) <= s * (1 + 1e-14));
                    CHECK(std::abs(pair(Phi, phi)) <= s * t * (1 + 1e-12));
                    for (double beta = 0.0; beta < 1.0; beta += 0.25) {
                        CHECK(dist_norm(Phi, p, q, beta + 0.25, w) <= dist_norm(Phi, p, q, beta, w) * (1 + 1e-14));
                        CHECK(e_norm(f, p, q, beta, w) <= e_norm(f, p, q, beta + 0.25, w) * (1 + 1e-14));
                    }
                }
            }
        }
    }

    TEST_CASE("reordering worked examples")
    {
        const auto sys = build_appell(gaussian_measure(1), 10);
        const auto id = sys.measure_id();
        const auto one = KernelSequence::constant(1, 3, Basis::appell_p, id, 1.0);
        const auto m1 = reorder_p_to_monomial(sys, one);
        CHECK(m1.basis == Basis::monomial);
        CHECK(max_abs_diff(m1, KernelSequence::constant(1, 3, Basis::monomial, "", 1.0)) == 0.0);

        const auto P2 = KernelSequence::single(SymKernel::tensor_power(cvector{1.0}, 2), 2, Basis::appell_p, id);
        const auto mono = reorder_p_to_monomial(sys, P2);
        CHECK(mono[0].coeffs()[0] == complex(-1.0));
        CHECK(mono[1].is_zero());
        CHECK(mono[2].coeffs()[0] == complex(1.0));

        const auto x2 = KernelSequence::single(SymKernel::tensor_power(cvector{1.0}, 2), 2, Basis::monomial);
        const auto back = reorder_monomial_to_p(sys, x2);
        CHECK(back[0].coeffs()[0] == complex(1.0));
        CHECK(back[2].coeffs()[0] == complex(1.0));
        CHECK(back.measure_id == id);

        const auto c = KernelSequence::constant(1, 4, Basis::monomial, "", 2.5);
        CHECK(max_abs_diff(reorder_monomial_to_p(sys, c), KernelSequence::constant(1, 4, Basis::appell_p, id, 2.5))
              == 0.0);

        CHECK(std::abs(eval_test(sys, P2, cvector{2.0}) - 3.0) < 1e-14);
        CHECK(eval_test(sys, KernelSequence::constant(1, 2, Basis::appell_p, id, 4.0), cvector{9.0})
              == complex(4.0));
        CHECK_THROWS_AS(reorder_p_to_monomial(sys, KernelSequence::constant(1, 11, Basis::appell_p, id, 1.0)),
                        std::out_of_range);
    }

    TEST_CASE("reordering round trips and pointwise agreement")
    {
        std::mt19937_64 rng(34);
        const std::vector<MeasurePtr> measures{gaussian_measure(1), poisson_measure_1d(1.0), gaussian_measure(2),
                                               mixture_grid_measure()};
        for (const auto &mu : measures) {
            const auto sys = build_appell(mu, 10);
            for (int trial = 0; trial < 10; ++trial) {
                const int N = static_cast<int>(rng() % 11);
                const auto phi = random_sequence(rng, mu->dim(), N, Basis::appell_p, mu->id());
                const auto there = reorder_p_to_monomial(sys, phi);
                const auto back = reorder_monomial_to_p(sys, there);
                double scale = 1.0;
                for (const auto &k : there.kernels) {
                    scale = std::max(scale, k.max_abs());
                }
                CHECK(max_abs_diff(back, phi) < 1e-12 * scale);

                const auto f = random_sequence(rng, mu->dim(), N, Basis::monomial, "");
                const auto fp = reorder_monomial_to_p(sys, f);
                double fscale = 1.0;
                for (const auto &k : fp.kernels) {
                    fscale = std::max(fscale, k.max_abs());
                }
                CHECK(max_abs_diff(reorder_p_to_monomial(sys, fp), f) < 1e-12 * fscale);

                // unit-ball points
                auto x = random_vector(rng, mu->dim(), 1.0 / std::sqrt(static_cast<double>(mu->dim())));
                const complex a = eval_test(sys, phi, x);
                const complex b = eval_monomial(there, x);
                CHECK(std::abs(a - b) < 1e-11 * std::max(1.0, std::abs(a)));
            }
        }
    }
}
