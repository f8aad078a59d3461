#pragma once

#include <vector>

#include "combdeform/complex.hpp"
#include "combdeform/poset.hpp"

namespace combdeform {

/// Face poset of a regular CW complex: cells with a dimension grading and the
/// face order. The grading is checked against the order on construction.
struct RegularCWPoset {
  Poset order;
  std::vector<int> dims;

  static RegularCWPoset make(Poset order, std::vector<int> dims);

  std::size_t size() const noexcept { return order.size(); }
  int dim(ElementIndex c) const { return dims.at(c); }
};

/// F(K): nonempty simplices of K under strict inclusion, each labelled by its
/// face tuple.
RegularCWPoset face_poset(const SimplicialComplex& k);

}  // namespace combdeform
