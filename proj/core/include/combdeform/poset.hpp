#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "combdeform/complex.hpp"
#include "combdeform/errors.hpp"
#include "combdeform/label.hpp"

namespace combdeform {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using ElementIndex = std::size_t;

/// Finite poset over labelled elements, stored as its strict order relation
/// (both directions, as bitsets) plus the derived cover relation.
class Poset {
 public:
  Poset();

  /// Builds the order generated by `covers` (pairs lower < upper). Throws
  /// InputError on unknown labels or a cycle. Listed pairs that are not
  /// covers of the generated order are accepted and, if `redundant` is given,
  /// appended there.
  static Poset from_covers(std::vector<Label> elements,
                           const std::vector<std::pair<Label, Label>>& covers,
                           std::vector<std::pair<Label, Label>>* redundant = nullptr);

  /// Builds the order from a strict relation; irreflexivity, antisymmetry and
  /// transitivity are verified (InputError otherwise).
  static Poset from_less(std::vector<Label> elements,
                         const std::function<bool(ElementIndex, ElementIndex)>& less);

  std::size_t size() const noexcept { return data_->labels.size(); }
  bool empty() const noexcept { return size() == 0; }
  const Label& label(ElementIndex i) const { return data_->labels.at(i); }
  std::span<const Label> labels() const noexcept { return data_->labels; }
  std::optional<ElementIndex> index_of(const Label& l) const;

  bool less(ElementIndex a, ElementIndex b) const { return data_->above[a].test(b); }
  bool leq(ElementIndex a, ElementIndex b) const { return a == b || less(a, b); }
  bool comparable(ElementIndex a, ElementIndex b) const { return leq(a, b) || leq(b, a); }

  const Bitset& strictly_above(ElementIndex i) const { return data_->above.at(i); }
  const Bitset& strictly_below(ElementIndex i) const { return data_->below.at(i); }
  const std::vector<ElementIndex>& upper_covers(ElementIndex i) const { return data_->upper_covers.at(i); }
  const std::vector<ElementIndex>& lower_covers(ElementIndex i) const { return data_->lower_covers.at(i); }

  /// Length of the longest chain ending at i (minimal elements have rank 0).
  int rank(ElementIndex i) const { return data_->rank.at(i); }

  std::vector<ElementIndex> minimal_elements() const;
  std::vector<ElementIndex> maximal_elements() const;
  bool is_chain(std::span<const ElementIndex> elems) const;
  bool is_antichain(std::span<const ElementIndex> elems) const;

  Poset opposite() const;
  /// Induced order on `subset`; element i of the result is subset[i].
  Poset induced(std::span<const ElementIndex> subset) const;

  /// Deterministic linear extension: by rank, ties by label.
  std::vector<ElementIndex> linear_extension() const;

 private:
  struct Data {
    std::vector<Label> labels;
    std::unordered_map<Label, ElementIndex, LabelHash> lookup;
    std::vector<Bitset> above;
    std::vector<Bitset> below;
    std::vector<std::vector<ElementIndex>> upper_covers;
    std::vector<std::vector<ElementIndex>> lower_covers;
    std::vector<int> rank;
  };
  static Poset from_relation(std::vector<Label> elements, std::vector<Bitset> above);

  std::shared_ptr<const Data> data_;
};

/// Raised when a poset fails to be a bounded lattice; carries the offending
/// pair (or the offending element twice for missing bounds).
class NotALattice : public Error {
 public:
  NotALattice(const std::string& reason, Label first, Label second)
      : Error("not a lattice: " + reason + " (" + first.str() + ", " + second.str() + ")"),
        first_(std::move(first)), second_(std::move(second)) {}

  const Label& first() const noexcept { return first_; }
  const Label& second() const noexcept { return second_; }

 private:
  Label first_;
  Label second_;
};

/// Finite bounded lattice with dense meet and join tables.
class BoundedLattice {
 public:
  /// Verifies unique bounds and that every pair has a unique meet and join.
  static BoundedLattice from_poset(Poset p);

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const Label& label(ElementIndex i) const { return poset_.label(i); }
  std::optional<ElementIndex> index_of(const Label& l) const { return poset_.index_of(l); }
  bool leq(ElementIndex a, ElementIndex b) const { return poset_.leq(a, b); }
  bool less(ElementIndex a, ElementIndex b) const { return poset_.less(a, b); }

  ElementIndex bottom() const noexcept { return bottom_; }
  ElementIndex top() const noexcept { return top_; }
  ElementIndex meet(ElementIndex a, ElementIndex b) const { return meet_[a * size() + b]; }
  ElementIndex join(ElementIndex a, ElementIndex b) const { return join_[a * size() + b]; }
  /// Meet of a set; the empty meet is the top.
  ElementIndex meet_set(std::span<const ElementIndex> s) const;
  /// Join of a set; the empty join is the bottom.
  ElementIndex join_set(std::span<const ElementIndex> s) const;

  std::vector<ElementIndex> atoms() const { return poset_.upper_covers(bottom_); }
  bool is_atomic() const;
  /// Elements other than the bottom and top, in index order.
  std::vector<ElementIndex> proper_elements() const;

 private:
  Poset poset_;
  ElementIndex bottom_ = 0;
  ElementIndex top_ = 0;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
};

inline BoundedLattice as_lattice(const Poset& p) { return BoundedLattice::from_poset(p); }

enum class MapKind { identity, ascending, descending, mixed };

/// Order-preserving self-map of a poset such that every element is
/// comparable with its image. Construction verifies both properties.
class MonotoneMap {
 public:
  static MonotoneMap verified(const Poset& domain, std::vector<ElementIndex> values);

  ElementIndex operator()(ElementIndex x) const { return values_.at(x); }
  const std::vector<ElementIndex>& values() const noexcept { return values_; }
  MapKind kind() const noexcept { return kind_; }
  bool is_ascending() const noexcept { return kind_ == MapKind::identity || kind_ == MapKind::ascending; }
  bool is_descending() const noexcept { return kind_ == MapKind::identity || kind_ == MapKind::descending; }
  bool is_idempotent() const;
  std::vector<ElementIndex> fixed_points() const;

 private:
  std::vector<ElementIndex> values_;
  MapKind kind_ = MapKind::identity;
};

/// Delta(P): simplices are the nonempty chains, vertices labelled as P.
SimplicialComplex order_complex(const Poset& p);

/// bar L = L minus {bottom, top} with the induced order.
Poset proper_part(const BoundedLattice& l);

/// Sublattice of the bottom, all joins of atoms, and the top.
BoundedLattice atomic_sublattice(const BoundedLattice& l);

/// Subposet of `l` induced on `elements`, as a lattice (NotALattice if not).
BoundedLattice sublattice(const BoundedLattice& l, std::span<const ElementIndex> elements);

/// Boolean lattice B_n on letters x, y, z, w, v, u, ...; the empty set is
/// labelled "0".
BoundedLattice boolean_lattice(int n);
/// Chain 0 < a < b < ... < 1 with `n_elements` elements (at least 2).
BoundedLattice chain_lattice(int n_elements);

}  // namespace combdeform
