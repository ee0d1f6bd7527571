#pragma once

#include <random>

#include "weyl/matrix.hpp"

namespace weyl {

using Rng = std::mt19937_64;

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal moved into Q.
Matrix randomUnitary(int n, Rng& rng);

/// Haar unitary rescaled by det^{-1/N}, so det = 1.
Matrix randomSpecialUnitary(int n, Rng& rng);

/// Gaussian skew-hermitian matrix (not normalized).
Matrix randomSkewHermitian(int n, Rng& rng);

/// Independent uniform angles in (-pi, pi].
RealVector randomAngles(int n, Rng& rng);

/// Uniform angles conditioned on every circular gap exceeding `minGap`
/// (rejection sampling). Throws std::invalid_argument when the gap cannot
/// fit n points on the circle.
RealVector randomRegularAngles(int n, double minGap, Rng& rng);

}  // namespace weyl
