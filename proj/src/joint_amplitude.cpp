#include "spdcoam/joint_amplitude.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "spdcoam/errors.hpp"

namespace spdcoam {

namespace {

// Exact for n <= 62; the guard in reexpand_pair keeps n <= 40.
double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return static_cast<double>(acc);
}

std::complex<double> int_pow(std::complex<double> z, int n) {
    std::complex<double> out(1.0, 0.0);
    for (int k = 0; k < n; ++k) out *= z;
    return out;
}

}  // namespace

std::vector<ReexpansionTerm> reexpand_pair(int l_s, int l_i, const std::vector<int>& h2_orders) {
    if (l_s < 0 || l_i < 0)
        throw BoundedDomainError("reexpand_pair: windings must be nonnegative");
    if (l_s > 20 || l_i > 20)
        throw BoundedDomainError("reexpand_pair: winding above the binomial guard (20)");
    if (h2_orders.empty())
        throw BoundedDomainError(
            "reexpand_pair: h2_orders must be nonempty; use {0} for an azimuthally symmetric pair envelope");
    double scale = std::ldexp(1.0, -(l_s + l_i));  // 2^-(l_s + l_i), exact
    std::vector<ReexpansionTerm> terms;
    terms.reserve(h2_orders.size() * (l_s + 1) * (l_i + 1));
    for (int m : h2_orders) {
        for (int n_s = 0; n_s <= l_s; ++n_s) {
            for (int n_i = 0; n_i <= l_i; ++n_i) {
                ReexpansionTerm t;
                double sign = (l_i - n_i) % 2 == 0 ? 1.0 : -1.0;
                t.coeff = scale * sign * binomial(l_s, n_s) * binomial(l_i, n_i);
                t.l_plus = m + n_s + n_i;
                t.l_minus = (l_s + l_i) - (m + n_s + n_i);
                t.pow_plus = n_s + n_i;
                t.pow_minus = (l_s + l_i) - (n_s + n_i);
                terms.push_back(t);
            }
        }
    }
    return terms;
}

double verify_reexpansion(int l_s, int l_i, const std::function<double(double)>& h_s,
                          const std::function<double(double)>& h_i, const PolarGrid& grid_s,
                          const PolarGrid& grid_i) {
    auto check_small = [](const PolarGrid& g, const char* name) {
        if (g.radial().size() > 32 || g.n_phi() > 32)
            throw BoundedDomainError(std::string("verify_reexpansion: ") + name +
                                     " grid must be at most 32x32");
    };
    check_small(grid_s, "signal");
    check_small(grid_i, "idler");

    auto terms = reexpand_pair(l_s, l_i, {0});

    // Precompute one photon's node data: position as a complex number, the
    // sampled radial value, and the winding phase e^{i l phi}.
    struct Node {
        std::complex<double> z;
        double h;
        std::complex<double> phase;
        double p;
    };
    auto nodes_of = [](const PolarGrid& g, const std::function<double(double)>& h, int l) {
        std::vector<Node> nodes;
        nodes.reserve(g.radial().size() * g.n_phi());
        for (const auto& rn : g.radial()) {
            double hv = h(rn.p);
            for (int j = 0; j < g.n_phi(); ++j) {
                std::complex<double> unit(g.cos_phi(j), g.sin_phi(j));
                nodes.push_back({rn.p * unit, hv, int_pow(unit, l), rn.p});
            }
        }
        return nodes;
    };
    auto s_nodes = nodes_of(grid_s, h_s, l_s);
    auto i_nodes = nodes_of(grid_i, h_i, l_i);

    int total = l_s + l_i;
    double max_err = 0.0;
    std::vector<std::complex<double>> pp(total + 1), pm(total + 1);
    for (const auto& ns : s_nodes) {
        for (const auto& ni : i_nodes) {
            std::complex<double> direct = ns.h * ni.h * ns.phase * ni.phase *
                                          std::pow(ns.p, l_s) * std::pow(ni.p, l_i);
            std::complex<double> z_plus = ns.z + ni.z;
            std::complex<double> z_minus = ns.z - ni.z;
            // powers 0..total of the joint coordinates, by iterated products
            pp[0] = pm[0] = {1.0, 0.0};
            for (int k = 1; k <= total; ++k) {
                pp[k] = pp[k - 1] * z_plus;
                pm[k] = pm[k - 1] * z_minus;
            }
            std::complex<double> expanded(0.0, 0.0);
            for (const auto& t : terms) expanded += t.coeff * pp[t.pow_plus] * pm[t.pow_minus];
            expanded *= ns.h * ni.h;
            max_err = std::max(max_err, std::abs(direct - expanded));
        }
    }
    return max_err;
}

SampledPolarField sample_polar_field(const PolarGrid& grid,
                                     const std::function<std::complex<double>(double, double)>& f) {
    SampledPolarField out{grid, {}};
    out.values.reserve(grid.radial().size() * grid.n_phi());
    for (std::size_t r = 0; r < grid.radial().size(); ++r) {
        double p = grid.radial()[r].p;
        for (int j = 0; j < grid.n_phi(); ++j) out.values.push_back(f(p, grid.phi(j)));
    }
    return out;
}

RTransformResult r_transform(const SampledPolarField& f, const TransverseVec& q,
                             double z0_factor) {
    const PolarGrid& g = f.grid;
    const std::size_t n_rad = g.radial().size();
    const int n_phi = g.n_phi();
    if (f.values.size() != n_rad * static_cast<std::size_t>(n_phi))
        throw std::invalid_argument("r_transform: field size does not match its grid");

    double peak = 0.0;
    for (const auto& v : f.values) peak = std::max(peak, std::abs(v));
    double outer = 0.0;
    for (int j = 0; j < n_phi; ++j)
        outer = std::max(outer, std::abs(f.values[(n_rad - 1) * n_phi + j]));

    const double dphi = 2.0 * std::numbers::pi / n_phi;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t r = 0; r < n_rad; ++r) {
        double p = g.radial()[r].p;
        double jw = g.radial()[r].w * p * dphi;  // polar area element
        double quad = z0_factor * p * p;
        for (int j = 0; j < n_phi; ++j) {
            double dot = p * (g.cos_phi(j) * q.x + g.sin_phi(j) * q.y);
            double phase = 0.5 * dot - quad;
            acc += f.values[r * n_phi + j] * jw *
                   std::complex<double>(std::cos(phase), std::sin(phase));
        }
    }
    return {acc, outer > 1e-8 * peak};
}

RTransformResult factorized_phi2(const JointEnvelope& env, const TransverseVec& q_plus,
                                 const TransverseVec& q_minus, double z0_factor) {
    RTransformResult a = r_transform(env.f_plus_part, q_plus, z0_factor);
    RTransformResult b = r_transform(env.f_minus_part, q_minus, z0_factor);
    return {a.value * b.value, a.support_warning || b.support_warning};
}

}  // namespace spdcoam
