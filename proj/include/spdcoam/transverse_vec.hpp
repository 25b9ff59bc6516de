#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace spdcoam {

// Transverse wavevector in um^-1; x is the distinguished walk-off axis.
struct TransverseVec {
    double x = 0.0;
    double y = 0.0;

    double magnitude_sq() const { return x * x + y * y; }
    double magnitude() const { return std::sqrt(magnitude_sq()); }

    // Azimuth measured from the x axis, normalized to (-pi, pi].
    double azimuth() const {
        double a = std::atan2(y, x);
        return a == -std::numbers::pi ? std::numbers::pi : a;
    }

    std::complex<double> as_complex() const { return {x, y}; }
};

}  // namespace spdcoam
