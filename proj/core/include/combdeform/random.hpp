#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "combdeform/graph.hpp"
#include "combdeform/poset.hpp"

namespace combdeform {

/// Seeded generator whose draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return uniform(1, den) <= num; }

 private:
  std::mt19937_64 engine_;
};

/// Connected graph on n in [min_n, max_n] vertices labelled 0..n-1: a random
/// recursive tree plus each remaining pair with probability num/den.
Graph random_connected_graph(Rng& rng, int min_n, int max_n, std::uint64_t num, std::uint64_t den);

/// Lattice of a random closure system: up to `generators` random subsets of
/// a ground set of at most `max_points` points, closed under intersection,
/// with the ground set added. Elements are labelled "{0,2}", "{}". A target
/// size is drawn uniformly from [3, max_elements] and closure systems are
/// redrawn until one has exactly that many sets.
BoundedLattice random_lattice(Rng& rng, int max_points, int generators, std::size_t max_elements);

/// A crosscut of L: a greedy maximal antichain of bar L built in random
/// order, accepted if it is a crosscut; after `attempts` failures the atoms.
std::vector<ElementIndex> random_crosscut(Rng& rng, const BoundedLattice& l, int attempts = 20);

}  // namespace combdeform
