#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "combdeform/certificate.hpp"
#include "combdeform/complex.hpp"
#include "combdeform/errors.hpp"
#include "combdeform/graph.hpp"
#include "combdeform/poset.hpp"

namespace combdeform {

/// Partial matching on the face poset of a simplicial complex: pairs of
/// simplex indices (lower, upper) where upper covers lower.
struct PartialMatching {
  std::shared_ptr<const SimplicialComplex> complex;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  /// Unmatched simplex indices, ascending.
  std::vector<std::size_t> critical() const;
};

struct AcyclicityReport {
  bool acyclic = true;
  /// Simplex indices along a directed cycle (alternating matched up-steps
  /// and face down-steps), empty when acyclic.
  std::vector<std::size_t> cycle;
  std::vector<std::size_t> critical;
};

/// Validates the matching (InputError if a pair is not a cover or a simplex is
/// used twice) and searches the modified Hasse diagram for a directed cycle.
AcyclicityReport check_acyclic(const PartialMatching& m);

/// A matching together with the subcomplex spanned by its critical cells.
struct MorseMatching {
  PartialMatching matching;
  SimplicialComplex critical;
};

/// Collapses from the matching's complex onto `target`, which must be the
/// critical subcomplex. The highest-dimensional emissible pair goes first,
/// ties broken by simplex order. InternalError if the schedule gets stuck.
DeformationCertificate matching_to_collapses(const PartialMatching& m, const SimplicialComplex& target);
inline DeformationCertificate matching_to_collapses(const MorseMatching& m) {
  return matching_to_collapses(m.matching, m.critical);
}

/// Matching on Delta(Q) for an ascending idempotent map phi: a chain c not
/// inside Fix(phi) is paired with c xor {phi(x)}, x the largest element of c
/// moved by phi. Critical cells are the chains of Fix(phi). Acyclicity is
/// checked before returning (InternalError on failure).
MorseMatching closure_matching(const Poset& q, const MonotoneMap& phi);
/// Dual construction for a descending idempotent map, pivoting on the
/// smallest moved element.
MorseMatching interior_matching(const Poset& q, const MonotoneMap& psi);

/// Face-level forms on Bd K = Delta(F(K)); `phi` maps simplex indices of K to
/// simplex indices of K. The map is checked to be monotone and idempotent.
MorseMatching closure_matching(const SimplicialComplex& k, const std::function<std::size_t(std::size_t)>& phi);
MorseMatching interior_matching(const SimplicialComplex& k, const std::function<std::size_t(std::size_t)>& psi);

/// Positions of the elements of bar L in the order used to define k(S):
/// sorted by rank, ties by label.
std::vector<std::size_t> jl_order(const BoundedLattice& l);

/// k(S) and a(S) for a set of elements of bar L (given as lattice indices).
/// For a chain, k equals |S| and a is empty.
struct JLData {
  std::size_t k = 0;
  std::optional<ElementIndex> a;
};
JLData jl_data(const BoundedLattice& l, const std::vector<std::size_t>& order, std::vector<ElementIndex> s);

/// The matching on F(J(L)) that pairs S with S + a(S) whenever S is not a
/// chain and a(S) is not in S. Critical cells are the chains of bar L.
MorseMatching jl_matching(const BoundedLattice& l);

/// Raised when a matching restricted to a subcomplex leaves it.
class ClosureViolation : public InternalError {
 public:
  using InternalError::InternalError;
};

/// The J(L) matching for L = Im N plus bounds, restricted to Gamma(P) (pair
/// description). Throws ClosureViolation if some S in Gamma(P) is matched
/// outside it. Critical cells are the simplices of Lo(G).
MorseMatching restricted_jl_matching(const Graph& g);

}  // namespace combdeform
