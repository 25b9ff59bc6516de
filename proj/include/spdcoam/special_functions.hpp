#pragma once

namespace spdcoam {

// Associated Laguerre polynomial L_p^l(x) for integer l >= 0, evaluated by
// the ascending three-term recurrence in the degree. Degrees above 64 are
// refused; the recurrence is stable for the small degrees used here and
// nothing certifies it beyond that.
double assoc_laguerre(int p, int l, double x);

// Unnormalized sinc, sin(x)/x, with the removable singularity handled so
// sinc_u(0) == 1 exactly. Even bit-for-bit: both signs of x take the same
// operations on |x|.
double sinc_u(double x);

}  // namespace spdcoam
