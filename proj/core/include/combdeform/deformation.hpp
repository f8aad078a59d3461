#pragma once

#include <span>

#include "combdeform/certificate.hpp"
#include "combdeform/complex.hpp"
#include "combdeform/graph.hpp"
#include "combdeform/matching.hpp"
#include "combdeform/poset.hpp"

namespace combdeform {

/// K to sd(K, sigma) with apex face_label(sigma). First the cone from the
/// apex over st(sigma) is built by expansions, then every coface rho of
/// sigma is collapsed together with rho + apex.
DeformationCertificate stellar_deformation(const SimplicialComplex& k, std::span<const Label> sigma);
DeformationCertificate stellar_deformation(const SimplicialComplex& k, std::span<const Label> sigma,
                                           const Label& apex);

/// K to Bd K: stellar subdivisions at every face, by decreasing dimension and
/// then label order. The end is barycentric_subdivision(K).
DeformationCertificate bd_deformation(const SimplicialComplex& k);

/// Bd N(G) onto Lo(G) via the closure matching of N^2.
MorseMatching neighborhood_lovasz_matching(const Graph& g);
DeformationCertificate neighborhood_to_lovasz(const Graph& g);

/// J(L) onto Delta(bar L).
DeformationCertificate jl_deformation(const BoundedLattice& l);

/// Bd Gamma(L) collapsed onto Delta(bar L_a) (fixed faces relabelled by their
/// joins), followed by the expansions back up to Delta(bar L). For an atomic
/// lattice the second half is empty.
struct GammaDeformation {
  DeformationCertificate to_atomic;    // Bd Gamma(L) onto Delta(bar L_a)
  DeformationCertificate from_proper;  // Delta(bar L) onto Delta(bar L_a)
  DeformationCertificate combined;     // Bd Gamma(L) to Delta(bar L)
};
GammaDeformation gamma_deformation(const BoundedLattice& l);

/// Delta(bar L) onto Delta(bar L_C) through the two crosscut stages.
DeformationCertificate crosscut_deformation(const BoundedLattice& l, std::span<const ElementIndex> c);

}  // namespace combdeform
