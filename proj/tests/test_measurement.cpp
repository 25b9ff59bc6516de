#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "spdcoam/errors.hpp"
#include "spdcoam/measurement.hpp"

using namespace spdcoam;

namespace {

RadialProfile gaussian_envelope(double sigma, double r_max) {
    return RadialProfile::from_function(r_max, 512, [sigma](double r) {
        return std::exp(-(r * r) / (2.0 * sigma * sigma));
    });
}

}  // namespace

TEST_CASE("shifted_expansion_weights binomial rows") {
    auto intr = shifted_expansion_weights(2, Branch::Intrinsic);
    REQUIRE(intr.size() == 3);
    CHECK(intr[0] == std::pair<int, double>{0, 1.0});
    CHECK(intr[1] == std::pair<int, double>{1, 2.0});
    CHECK(intr[2] == std::pair<int, double>{2, 1.0});

    auto extr = shifted_expansion_weights(3, Branch::Extrinsic);
    REQUIRE(extr.size() == 4);
    CHECK(extr[0] == std::pair<int, double>{0, -1.0});
    CHECK(extr[1] == std::pair<int, double>{1, 3.0});
    CHECK(extr[2] == std::pair<int, double>{2, -3.0});
    CHECK(extr[3] == std::pair<int, double>{3, 1.0});

    CHECK_THROWS_AS(shifted_expansion_weights(-1, Branch::Intrinsic), BoundedDomainError);
    CHECK_THROWS_AS(shifted_expansion_weights(21, Branch::Extrinsic), BoundedDomainError);
}

TEST_CASE("RadialProfile interpolation and support") {
    RadialProfile ramp(2.0, {0.0, 0.5, 1.0});  // f(r) = r / 2 on [0, 2]
    CHECK(ramp(0.0) == 0.0);
    CHECK(ramp(0.5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(ramp(1.7) == doctest::Approx(0.85).epsilon(1e-15));
    CHECK(ramp(2.0) == 0.0);   // zero at and beyond r_max
    CHECK(ramp(5.0) == 0.0);
    CHECK(ramp(-1.0) == 0.0);

    CHECK_THROWS_AS(RadialProfile(0.0, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(RadialProfile(1.0, {1.0}), std::invalid_argument);
    std::vector<double> bad = {1.0, std::nan("")};
    CHECK_THROWS_AS(RadialProfile(1.0, bad), std::invalid_argument);

    auto g = RadialProfile::from_function(3.0, 601, [](double r) { return 2.0 * r + 1.0; });
    CHECK(g(1.234) == doctest::Approx(3.468).epsilon(1e-12));  // exact on linear input
}

TEST_CASE("pow_winding integer powers and conjugation") {
    std::complex<double> z(0.6, -1.1);
    CHECK(pow_winding(z, 0) == std::complex<double>(1.0, 0.0));
    CHECK(pow_winding(z, 3) == z * z * z);
    CHECK(pow_winding(z, -2) == std::conj(z) * std::conj(z));
}

TEST_CASE("coincidence_projection rejects overlapping collection regions") {
    auto grid = PolarGrid::gauss_legendre(8, 0.4, 16);
    auto env = gaussian_envelope(0.25, 2.8);
    MaskConfig good{{1.0, 0.0}, 1, 0.1};
    MaskConfig near_origin{{0.29, 0.0}, 1, 0.1};
    MaskConfig bad_waist{{1.0, 0.0}, 1, 0.0};
    CHECK_THROWS_AS(
        coincidence_projection(Branch::Intrinsic, 2, env, near_origin, good, grid),
        BoundedDomainError);
    CHECK_THROWS_AS(
        coincidence_projection(Branch::Intrinsic, 2, env, good, near_origin, grid),
        BoundedDomainError);
    CHECK_THROWS_AS(coincidence_projection(Branch::Intrinsic, 2, env, bad_waist, good, grid),
                    std::invalid_argument);
}

TEST_CASE("intrinsic charge scan selects q_s + q_i = total exactly") {
    const double w = 0.1;
    auto grid = PolarGrid::gauss_legendre(24, 4.0 * w, 32);
    auto env = gaussian_envelope(0.25, 2.8);
    MaskConfig ms{{1.0, 0.0}, 1, w};
    const int total = 2;

    double peak = 0.0;
    double runner_up = 0.0;
    int peak_at = -99;
    for (int q_i = -2; q_i <= 3; ++q_i) {
        MaskConfig mi{{-1.0, 0.0}, q_i, w};
        double amp = std::abs(coincidence_projection(Branch::Intrinsic, total, env, ms, mi, grid));
        if (amp > peak) {
            runner_up = peak;
            peak = amp;
            peak_at = q_i;
        } else {
            runner_up = std::max(runner_up, amp);
        }
    }
    CHECK(peak_at == 1);  // total - mask_s charge
    CHECK(peak > 0.0);
    CHECK(runner_up < 1e-4 * peak);
}

TEST_CASE("conjugating every charge preserves the magnitude bit for bit") {
    const double w = 0.1;
    auto grid = PolarGrid::gauss_legendre(16, 4.0 * w, 16);
    auto env = gaussian_envelope(0.25, 2.8);
    for (int q_i : {-1, 0, 1, 2}) {
        MaskConfig ms{{1.0, 0.0}, 1, w};
        MaskConfig mi{{-1.0, 0.0}, q_i, w};
        MaskConfig ms_c{{1.0, 0.0}, -1, w};
        MaskConfig mi_c{{-1.0, 0.0}, -q_i, w};
        auto a = coincidence_projection(Branch::Intrinsic, 2, env, ms, mi, grid);
        auto b = coincidence_projection(Branch::Intrinsic, -2, env, ms_c, mi_c, grid);
        CHECK(std::abs(a) == std::abs(b));
        CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a) + 1e-300);
    }
}

TEST_CASE("opposed-mask extrinsic amplitude is invisible and shrinks with the waist") {
    auto env = gaussian_envelope(0.25, 2.8);
    auto ratio_at = [&env](double w) {
        auto grid = PolarGrid::gauss_legendre(24, 4.0 * w, 32);
        MaskConfig ms{{1.0, 0.0}, 0, w};
        MaskConfig same{{1.0, 0.0}, 1, w};
        MaskConfig opp{{-1.0, 0.0}, 1, w};
        double ref =
            std::abs(coincidence_projection(Branch::Extrinsic, 1, env, ms, same, grid));
        double hid =
            std::abs(coincidence_projection(Branch::Extrinsic, 1, env, ms, opp, grid));
        REQUIRE(ref > 0.0);
        return hid / ref;
    };
    double r_wide = ratio_at(0.1);
    double r_narrow = ratio_at(0.05);
    CHECK(r_wide < 1e-6);
    CHECK(r_narrow < r_wide);
}

TEST_CASE("extrinsic same-side projection survives every split of the total") {
    const double w = 0.1;
    auto grid = PolarGrid::gauss_legendre(24, 4.0 * w, 32);
    auto env = gaussian_envelope(0.25, 2.8);
    const int total = 2;
    for (int m = 0; m <= total; ++m) {
        MaskConfig ms{{0.0, 1.0}, m, w};
        MaskConfig mi{{0.0, 1.0}, total - m, w};
        double amp =
            std::abs(coincidence_projection(Branch::Extrinsic, total, env, ms, mi, grid));
        CHECK(amp > 1e-12);
    }
}
