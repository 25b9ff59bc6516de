#pragma once

#include <random>

namespace spdcoam {

// Uniform double in [0, 1) from the top 53 bits of the engine output.
// std::uniform_real_distribution is not pinned across standard library
// implementations; this is, which keeps seeded runs portable.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace spdcoam
