#include "spdcoam/polar_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace spdcoam {

UnitCircle::UnitCircle(int n_) : n(n_), cos_v(n_), sin_v(n_) {
    if (n < 1) throw std::invalid_argument("UnitCircle: n must be positive");
    cos_v[0] = 1.0;
    sin_v[0] = 0.0;
    int half = n / 2;
    for (int j = 1; j < half; ++j) {
        double theta = (2.0 * std::numbers::pi * j) / n;
        cos_v[j] = std::cos(theta);
        sin_v[j] = std::sin(theta);
    }
    if (n % 2 == 0 && n >= 2) {
        cos_v[half] = -1.0;
        sin_v[half] = 0.0;
    } else if (n % 2 == 1 && half >= 1) {
        // odd n: the midpoint index floor(n/2) has no mirror partner issue
        double theta = (2.0 * std::numbers::pi * half) / n;
        cos_v[half] = std::cos(theta);
        sin_v[half] = std::sin(theta);
    }
    for (int j = half + 1; j < n; ++j) {
        cos_v[j] = cos_v[n - j];
        sin_v[j] = -sin_v[n - j];
    }
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

PolarGrid::PolarGrid(std::vector<RadialNode> radial, int n_phi)
    : radial_(std::move(radial)), n_phi_(n_phi), circle_(n_phi >= 1 ? n_phi : 1) {
    if (radial_.empty())
        throw std::invalid_argument("PolarGrid: needs at least one radial node");
    double prev = -1.0;
    for (const auto& node : radial_) {
        if (!(node.p >= 0.0) || !(node.p > prev))
            throw std::invalid_argument("PolarGrid: radial nodes must be nonnegative and strictly increasing");
        if (!(node.w > 0.0))
            throw std::invalid_argument("PolarGrid: quadrature weights must be positive");
        prev = node.p;
    }
    if (n_phi_ < 16 || !is_power_of_two(n_phi_))
        throw std::invalid_argument("PolarGrid: n_phi must be a power of two and at least 16, got " +
                                    std::to_string(n_phi_));
}

PolarGrid PolarGrid::gauss_legendre(int n_radial, double p_max, int n_phi) {
    if (n_radial < 1) throw std::invalid_argument("PolarGrid: n_radial must be positive");
    if (!(p_max > 0.0)) throw std::invalid_argument("PolarGrid: p_max must be positive");
    return PolarGrid(gauss_legendre_nodes(n_radial, 0.0, p_max), n_phi);
}

double PolarGrid::phi(int j) const {
    return (2.0 * std::numbers::pi * j) / n_phi_;
}

std::vector<RadialNode> gauss_legendre_nodes(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre_nodes: n must be positive");
    if (!(b > a)) throw std::invalid_argument("gauss_legendre_nodes: need b > a");
    std::vector<RadialNode> out(n);
    int m = (n + 1) / 2;
    double xm = 0.5 * (b + a);
    double xl = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        // root of P_n near cos(pi*(i + 0.75)/(n + 0.5)), polished by Newton
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / pp;
            if (std::fabs(z - z1) < 1e-15) break;
        }
        double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        // z descends from +1; store nodes in ascending position order
        out[i] = {xm - xl * z, w};
        out[n - 1 - i] = {xm + xl * z, w};
    }
    return out;
}

}  // namespace spdcoam
