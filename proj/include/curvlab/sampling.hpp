#pragma once

#include "curvlab/spectrum.hpp"
#include "curvlab/tensor.hpp"

#include <random>

namespace curvlab {

// Seeded samplers used by the property checks. All draw from the supplied
// engine only, so a fixed seed fixes every output.

// Riemannian spectrum with `distinct` separated values (gap >= 0.15) in
// [-2, 2], random multiplicities summing to n, ambient curvature in [-1, 1].
PrincipalSpectrum random_spectrum(std::mt19937_64& rng, int n, int distinct);

// Same but with random epsilon = +-1 and a random +-1 signature.
PrincipalSpectrum random_spectrum_semi(std::mt19937_64& rng, int n, int distinct);

// Symmetric tensor with entries uniform in [-1, 1].
SymTensor2 random_sym(std::mt19937_64& rng, int n);

// Generalized curvature tensor: sum of `terms` wedge squares E_i ^ F_i.
CurvTensor4 random_curvature(std::mt19937_64& rng, int n, int terms = 2);

// Well-conditioned change of frame: identity plus amp-scaled noise.
LinMap random_congruence(std::mt19937_64& rng, int n, double amp = 0.3);

} // namespace curvlab
