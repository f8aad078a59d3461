#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace combdeform {

/// Canonical vertex label: either an atomic name or an ordered tuple of
/// labels. Subdivision-generated vertices are tuples of the labels of the
/// face they stand for, so derived complexes have reproducible names.
///
/// Labels are immutable and cheap to copy. The total order puts atoms before
/// tuples; atoms made only of decimal digits compare numerically and precede
/// other atoms, which compare as strings; tuples compare lexicographically.
class Label {
 public:
  Label();

  static Label atom(std::string name);
  static Label tuple(std::vector<Label> items);

  bool is_atom() const noexcept { return rep_->is_atom; }
  const std::string& name() const noexcept { return rep_->name; }
  std::span<const Label> items() const noexcept { return rep_->items; }
  std::size_t hash() const noexcept { return rep_->hash; }

  /// Human-readable form: atoms verbatim, tuples as "(a,b,...)".
  std::string str() const;

  friend bool operator==(const Label& a, const Label& b) noexcept;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept;

 private:
  struct Rep {
    bool is_atom = true;
    std::string name;
    std::vector<Label> items;
    std::size_t hash = 0;
  };
  explicit Label(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const noexcept { return l.hash(); }
};

/// Tuple of the given labels after sorting them.
Label sorted_tuple(std::vector<Label> items);

}  // namespace combdeform

template <>
struct std::hash<combdeform::Label> {
  std::size_t operator()(const combdeform::Label& l) const noexcept { return l.hash(); }
};
