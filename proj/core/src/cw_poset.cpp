#include "combdeform/cw_poset.hpp"

namespace combdeform {

RegularCWPoset RegularCWPoset::make(Poset order, std::vector<int> dims) {
  if (dims.size() != order.size()) throw InputError("cell grading does not match the cell count");
  for (ElementIndex c = 0; c < order.size(); ++c)
    for (ElementIndex d : order.upper_covers(c))
      if (dims[c] >= dims[d]) throw InputError("cell order does not respect dimension at " + order.label(c).str());
  return RegularCWPoset{std::move(order), std::move(dims)};
}

RegularCWPoset face_poset(const SimplicialComplex& k) {
  std::vector<Label> labels;
  std::vector<int> dims;
  labels.reserve(k.size());
  for (const auto& s : k.simplices()) {
    labels.push_back(Label::tuple(k.labels(s)));
    dims.push_back(static_cast<int>(s.size()) - 1);
  }
  std::vector<std::pair<Label, Label>> covers;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t f : k.boundary_faces(i)) covers.emplace_back(labels[f], labels[i]);
  return RegularCWPoset::make(Poset::from_covers(std::move(labels), covers), std::move(dims));
}

}  // namespace combdeform
