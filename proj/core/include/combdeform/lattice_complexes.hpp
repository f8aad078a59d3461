#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combdeform/complex.hpp"
#include "combdeform/poset.hpp"

namespace combdeform {

/// Gamma(L): vertices are the atoms, sigma is a simplex iff its join is not
/// the top. Throws InputError if the result would be empty.
SimplicialComplex atom_crosscut_complex(const BoundedLattice& l);

struct CrosscutReport {
  bool valid = true;
  /// Members that are the bottom, the top, or out of range.
  std::vector<ElementIndex> not_proper;
  /// Comparable pairs (lower, upper) among the members.
  std::vector<std::pair<ElementIndex, ElementIndex>> comparable;
  /// A maximal chain of L (bottom to top) avoiding every member, if any.
  std::optional<std::vector<ElementIndex>> unsaturated_chain;

  std::string describe(const BoundedLattice& l) const;
};

/// Checks that `c` is an antichain in bar L meeting every maximal chain. The
/// saturation test searches the cover graph of L minus C for a bottom-to-top
/// path, so it is exact at any lattice size.
CrosscutReport is_crosscut(const BoundedLattice& l, std::span<const ElementIndex> c);

/// Gamma(C, L): sigma subset of C is a simplex iff its join is not the top or
/// its meet is not the bottom. Throws InputError for an invalid crosscut.
SimplicialComplex crosscut_complex(const BoundedLattice& l, std::span<const ElementIndex> c);

/// J(L): subsets of bar L with a meet other than the bottom.
SimplicialComplex bounded_below_complex(const BoundedLattice& l);

/// Elements of L_C: the bottom, the top, and every join and every meet of a
/// nonempty subset of C, in index order.
std::vector<ElementIndex> crosscut_elements(const BoundedLattice& l, std::span<const ElementIndex> c);
/// L_C as an induced subposet of L.
Poset crosscut_subposet(const BoundedLattice& l, std::span<const ElementIndex> c);
/// L_C as a lattice; NotALattice if the induced order is not one.
BoundedLattice crosscut_sublattice(const BoundedLattice& l, std::span<const ElementIndex> c);

/// The crosscut retraction on bar L: x goes to the join of C below x when x
/// lies above some member, otherwise to the meet of C above x. Element i of
/// the domain is proper_elements()[i].
MonotoneMap crosscut_map(const BoundedLattice& l, std::span<const ElementIndex> c);

/// The retraction split into two idempotent stages.
struct CrosscutStages {
  /// bar L.
  Poset domain;
  /// Element i of `domain` is lattice element proper[i].
  std::vector<ElementIndex> proper;
  /// Descending: x in L_{>=C} goes to the join of C below x.
  MonotoneMap lower;
  /// Fixed points of `lower` as an induced subposet; element i is
  /// lattice element middle_elements[i].
  Poset middle;
  std::vector<ElementIndex> middle_elements;
  /// Ascending on `middle`: y in L_{<=C} goes to the meet of C above y.
  MonotoneMap upper;
};
CrosscutStages crosscut_stages(const BoundedLattice& l, std::span<const ElementIndex> c);

/// psi on bar L: x goes to the join of the atoms below it. Descending and
/// idempotent; its image is bar L_a.
MonotoneMap atom_join_map(const BoundedLattice& l);

}  // namespace combdeform
