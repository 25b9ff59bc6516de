#include "spdcoam/special_functions.hpp"

#include <cmath>
#include <string>

#include "spdcoam/errors.hpp"

namespace spdcoam {

double assoc_laguerre(int p, int l, double x) {
    if (p < 0 || l < 0)
        throw BoundedDomainError("assoc_laguerre: p and l must be nonnegative");
    if (p > 64)
        throw BoundedDomainError("assoc_laguerre: degree p = " + std::to_string(p) +
                                 " exceeds the recurrence guard (64)");
    if (p == 0) return 1.0;
    double lk = 1.0;             // L_0^l
    double lk1 = 1.0 + l - x;    // L_1^l
    for (int k = 1; k < p; ++k) {
        double lk2 = ((2.0 * k + 1.0 + l - x) * lk1 - (k + l) * lk) / (k + 1.0);
        lk = lk1;
        lk1 = lk2;
    }
    return lk1;
}

double sinc_u(double x) {
    // The switch at 1e-4 keeps the truncation error of the x^4 series below
    // 1e-18 while staying far from the 0/0 region.
    double ax = std::fabs(x);
    if (ax < 1e-4) {
        double x2 = ax * ax;
        return 1.0 - x2 / 6.0 + (x2 * x2) / 120.0;
    }
    return std::sin(ax) / ax;
}

}  // namespace spdcoam
