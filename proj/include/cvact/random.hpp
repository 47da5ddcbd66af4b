#pragma once

#include "cvact/covariance.hpp"
#include "cvact/rng.hpp"

namespace cvact {

/// Random single-mode symplectic: rotation * squeezer * rotation.
SymplecticMap random_local_symplectic(Rng& rng, double max_squeeze = 0.6);

/// Random L-mode symplectic built from two rounds of local maps and
/// nearest-neighbour beam splitters.
SymplecticMap random_symplectic(int modes, Rng& rng, double max_squeeze = 0.6);

/// Random bona fide CM: random symplectic conjugation of a thermal spectrum
/// with symplectic eigenvalues drawn from [1/2, nu_max].
CovarianceMatrix random_cm(int modes, Rng& rng, double nu_max = 1.5,
                           double max_squeeze = 0.6);

/// Random symmetric positive semidefinite matrix G G^T with N(0, scale^2)
/// entries in G.
Matrix random_psd(int dim, Rng& rng, double scale = 0.4);

}  // namespace cvact
