#pragma once

#include <vector>

namespace spdcoam {

// cos/sin of 2*pi*j/n for j in [0, n). Only j <= n/2 is computed with libm;
// the rest is reflected, so entries at j and n - j are exact mirrors
// (equal cosine, negated sine). Quantities sampled through these tables
// inherit that mirror symmetry bit for bit.
struct UnitCircle {
    explicit UnitCircle(int n);

    int n;
    std::vector<double> cos_v;
    std::vector<double> sin_v;
};

// One radial quadrature node: position p (um^-1) and weight w for a plain
// integral over dp. Polar-area integrals multiply in p and the phi step.
struct RadialNode {
    double p;
    double w;
};

// Product discretization of the transverse plane: a radial quadrature rule
// and a uniform azimuth grid of n_phi points (power of two, at least 16).
class PolarGrid {
public:
    PolarGrid(std::vector<RadialNode> radial, int n_phi);

    // Gauss-Legendre radial rule on [0, p_max].
    static PolarGrid gauss_legendre(int n_radial, double p_max, int n_phi);

    const std::vector<RadialNode>& radial() const { return radial_; }
    int n_phi() const { return n_phi_; }
    double phi(int j) const;
    double cos_phi(int j) const { return circle_.cos_v[j]; }
    double sin_phi(int j) const { return circle_.sin_v[j]; }
    const UnitCircle& circle() const { return circle_; }

private:
    std::vector<RadialNode> radial_;
    int n_phi_;
    UnitCircle circle_;
};

// Gauss-Legendre nodes and weights on [a, b] via Newton iteration on the
// Legendre polynomial, in ascending node order.
std::vector<RadialNode> gauss_legendre_nodes(int n, double a, double b);

}  // namespace spdcoam
