#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spdcoam/errors.hpp"
#include "spdcoam/joint_amplitude.hpp"
#include "spdcoam/rng.hpp"

using namespace spdcoam;

TEST_CASE("reexpand_pair guards") {
    CHECK_THROWS_AS(reexpand_pair(-1, 0, {0}), BoundedDomainError);
    CHECK_THROWS_AS(reexpand_pair(0, -2, {0}), BoundedDomainError);
    CHECK_THROWS_AS(reexpand_pair(21, 0, {0}), BoundedDomainError);
    CHECK_THROWS_AS(reexpand_pair(1, 1, {}), BoundedDomainError);
    CHECK_NOTHROW(reexpand_pair(20, 20, {0}));
}

TEST_CASE("reexpand_pair elementary expansions") {
    // signal winding 1: e^{i phi_s} p_s = (z_plus + z_minus) / 2
    auto t10 = reexpand_pair(1, 0, {0});
    REQUIRE(t10.size() == 2);
    for (const auto& t : t10) {
        CHECK(t.coeff == std::complex<double>(0.5, 0.0));
        CHECK(t.pow_plus + t.pow_minus == 1);
        CHECK(t.l_plus == t.pow_plus);
        CHECK(t.l_minus == t.pow_minus);
    }
    // idler winding 1: e^{i phi_i} p_i = (z_plus - z_minus) / 2
    auto t01 = reexpand_pair(0, 1, {0});
    REQUIRE(t01.size() == 2);
    for (const auto& t : t01) {
        double want = t.pow_minus == 1 ? -0.5 : 0.5;
        CHECK(t.coeff == std::complex<double>(want, 0.0));
    }
}

TEST_CASE("reexpand_pair conserves total winding and coefficient mass") {
    for (int l_s = 0; l_s <= 6; ++l_s) {
        for (int l_i = 0; l_i <= 6; ++l_i) {
            auto terms = reexpand_pair(l_s, l_i, {0});
            CHECK(terms.size() == static_cast<std::size_t>((l_s + 1) * (l_i + 1)));
            double mass = 0.0;
            for (const auto& t : terms) {
                CHECK(t.l_plus + t.l_minus == l_s + l_i);
                CHECK(t.pow_plus + t.pow_minus == l_s + l_i);
                mass += std::abs(t.coeff);
            }
            CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("reexpansion identity at collapsed joint coordinates") {
    // z_s = z_i = 1: z_plus = 2, z_minus = 0, so only the pure-plus term
    // survives and must reproduce the direct value 1.
    for (int l_s : {0, 2, 5}) {
        for (int l_i : {0, 1, 4}) {
            auto terms = reexpand_pair(l_s, l_i, {0});
            std::complex<double> plus_only(0.0, 0.0);
            std::complex<double> minus_only(0.0, 0.0);
            for (const auto& t : terms) {
                if (t.pow_minus == 0) plus_only += t.coeff * std::pow(2.0, t.pow_plus);
                if (t.pow_plus == 0) minus_only += t.coeff * std::pow(2.0, t.pow_minus);
            }
            CHECK(plus_only.real() == doctest::Approx(1.0).epsilon(1e-14));
            double want = l_i % 2 == 0 ? 1.0 : -1.0;  // z_i = -1 case
            CHECK(minus_only.real() == doctest::Approx(want).epsilon(1e-14));
        }
    }
}

TEST_CASE("h2_orders shift the center-of-momentum winding") {
    auto terms = reexpand_pair(1, 1, {-2, 3});
    CHECK(terms.size() == 8);
    for (const auto& t : terms) CHECK(t.l_plus + t.l_minus == 2);
}

TEST_CASE("verify_reexpansion is exact to rounding on small grids") {
    auto grid = PolarGrid::gauss_legendre(16, 3.0, 16);
    auto h = [](double p) { return std::exp(-0.8 * p * p); };
    CHECK(verify_reexpansion(0, 0, h, h, grid, grid) == 0.0);
    CHECK(verify_reexpansion(2, 1, h, h, grid, grid) < 1e-12);
    CHECK(verify_reexpansion(3, 3, h, h, grid, grid) < 1e-12);

    auto big = PolarGrid::gauss_legendre(33, 3.0, 16);
    CHECK_THROWS_AS(verify_reexpansion(1, 1, h, h, big, grid), BoundedDomainError);
    auto wide = PolarGrid::gauss_legendre(16, 3.0, 64);
    CHECK_THROWS_AS(verify_reexpansion(1, 1, h, h, grid, wide), BoundedDomainError);
}

TEST_CASE("sample_polar_field is node-major") {
    auto grid = PolarGrid::gauss_legendre(3, 2.0, 16);
    auto f = sample_polar_field(grid, [](double p, double phi) {
        return std::complex<double>(p, phi);
    });
    REQUIRE(f.values.size() == 3 * 16);
    for (std::size_t r = 0; r < 3; ++r)
        for (int j = 0; j < 16; ++j) {
            CHECK(f.values[r * 16 + j].real() == grid.radial()[r].p);
            CHECK(f.values[r * 16 + j].imag() == grid.phi(j));
        }
}

TEST_CASE("r_transform reproduces the Gaussian transform") {
    std::mt19937_64 eng(2025);
    for (int k = 0; k < 12; ++k) {
        double a = 0.5 + 1.5 * uniform01(eng);
        double qx = 4.0 * uniform01(eng) - 2.0;
        double qy = 4.0 * uniform01(eng) - 2.0;
        double z0 = (k % 2 == 0) ? 0.0 : 0.3 * uniform01(eng);
        auto grid = PolarGrid::gauss_legendre(96, std::sqrt(23.0 / a), 128);
        auto field = sample_polar_field(grid, [a](double p, double) {
            return std::complex<double>(std::exp(-a * p * p), 0.0);
        });
        auto r = r_transform(field, {qx, qy}, z0);
        CHECK_FALSE(r.support_warning);
        std::complex<double> ca(a, z0);
        std::complex<double> exact =
            std::numbers::pi / ca * std::exp(-(qx * qx + qy * qy) / (16.0 * ca));
        CHECK(std::abs(r.value - exact) <= 1e-9 * std::abs(exact));
    }
}

TEST_CASE("r_transform is linear and bounded by the L1 mass") {
    auto grid = PolarGrid::gauss_legendre(32, 4.0, 32);
    auto f = sample_polar_field(grid, [](double p, double phi) {
        return std::exp(-p * p) * std::complex<double>(std::cos(phi), std::sin(2.0 * phi));
    });
    auto g = sample_polar_field(grid, [](double p, double phi) {
        return std::complex<double>(std::exp(-2.0 * p * p) * std::sin(phi), 0.1 * p);
    });
    SampledPolarField combo{grid, {}};
    combo.values.resize(f.values.size());
    const std::complex<double> alpha(1.3, -0.4);
    const std::complex<double> beta(-0.2, 0.9);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        combo.values[i] = alpha * f.values[i] + beta * g.values[i];
    TransverseVec q{0.7, -1.1};
    auto tf = r_transform(f, q, 0.2);
    auto tg = r_transform(g, q, 0.2);
    auto tc = r_transform(combo, q, 0.2);
    std::complex<double> want = alpha * tf.value + beta * tg.value;
    CHECK(std::abs(tc.value - want) <= 1e-12 * std::abs(want));

    double mass = 0.0;
    const double dphi = 2.0 * std::numbers::pi / 32;
    for (std::size_t r = 0; r < 32; ++r)
        for (int j = 0; j < 32; ++j)
            mass += grid.radial()[r].w * grid.radial()[r].p * dphi *
                    std::abs(f.values[r * 32 + j]);
    CHECK(std::abs(tf.value) <= mass * (1.0 + 1e-12));
}

TEST_CASE("r_transform flags undecayed support") {
    auto small = PolarGrid::gauss_legendre(32, 1.0, 32);
    auto wide = sample_polar_field(small, [](double p, double) {
        return std::complex<double>(std::exp(-p * p), 0.0);
    });
    CHECK(r_transform(wide, {0.1, 0.0}, 0.0).support_warning);

    auto roomy = PolarGrid::gauss_legendre(64, 6.0, 32);
    auto narrow = sample_polar_field(roomy, [](double p, double) {
        return std::complex<double>(std::exp(-p * p), 0.0);
    });
    CHECK_FALSE(r_transform(narrow, {0.1, 0.0}, 0.0).support_warning);

    SampledPolarField mismatched{small, {}};
    mismatched.values.resize(7);
    CHECK_THROWS_AS(r_transform(mismatched, {0.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("factorized_phi2 multiplies the two transforms and ORs warnings") {
    auto grid_p = PolarGrid::gauss_legendre(48, 5.0, 64);
    auto grid_m = PolarGrid::gauss_legendre(48, 5.0, 64);
    JointEnvelope env{
        sample_polar_field(grid_p, [](double p, double phi) {
            return std::exp(-1.1 * p * p) * std::complex<double>(std::cos(phi), std::sin(phi));
        }),
        sample_polar_field(grid_m, [](double p, double) {
            return std::complex<double>(std::exp(-0.6 * p * p), 0.0);
        })};
    TransverseVec qp{0.4, 0.2};
    TransverseVec qm{-0.9, 1.4};
    auto whole = factorized_phi2(env, qp, qm, 0.15);
    auto a = r_transform(env.f_plus_part, qp, 0.15);
    auto b = r_transform(env.f_minus_part, qm, 0.15);
    CHECK(whole.value == a.value * b.value);
    CHECK(whole.support_warning == (a.support_warning || b.support_warning));

    // Conjugating the fields while negating q and the quadratic factor
    // conjugates the product.
    JointEnvelope conj_env = env;
    for (auto& v : conj_env.f_plus_part.values) v = std::conj(v);
    for (auto& v : conj_env.f_minus_part.values) v = std::conj(v);
    auto flipped = factorized_phi2(conj_env, {-qp.x, -qp.y}, {-qm.x, -qm.y}, -0.15);
    CHECK(std::abs(flipped.value - std::conj(whole.value)) <= 1e-13 * std::abs(whole.value));
}
