#ifndef SPOKIT_SPECTRAL_HPP
#define SPOKIT_SPECTRAL_HPP

#include <cstdint>
#include <vector>

namespace spokit {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// monic characteristic polynomial, poly[i] = coefficient of x^i,
// poly[n] = 1; integer arithmetic throughout
std::vector<std::int64_t> char_poly(const IntMatrix& a);

// largest eigenvalue modulus of a nonnegative integer matrix; small
// matrices go through the characteristic polynomial with bisection,
// everything else through power iteration
double spectral_radius(const IntMatrix& a);

}  // namespace spokit

#endif
