#include "combdeform/poset.hpp"

#include <algorithm>
#include <numeric>

namespace combdeform {
namespace {

std::string letter_name(int i) {
  static const char* letters = "xyzwvutsrqponmlkjihgfedcba";
  return std::string(1, letters[i % 26]) + (i >= 26 ? std::to_string(i / 26) : "");
}

}  // namespace

Poset::Poset() : data_(std::make_shared<Data>()) {}

Poset Poset::from_relation(std::vector<Label> elements, std::vector<Bitset> above) {
  const std::size_t n = elements.size();
  auto d = std::make_shared<Data>();
  d->labels = std::move(elements);
  for (ElementIndex i = 0; i < n; ++i) {
    if (!d->lookup.emplace(d->labels[i], i).second)
      throw InputError("duplicate element label " + d->labels[i].str());
  }
  d->above = std::move(above);
  d->below.assign(n, Bitset(n));
  for (ElementIndex i = 0; i < n; ++i)
    for (auto j = d->above[i].find_first(); j != Bitset::npos; j = d->above[i].find_next(j)) d->below[j].set(i);

  d->upper_covers.assign(n, {});
  d->lower_covers.assign(n, {});
  for (ElementIndex i = 0; i < n; ++i) {
    for (auto j = d->above[i].find_first(); j != Bitset::npos; j = d->above[i].find_next(j)) {
      if (!d->above[i].intersects(d->below[j])) {
        d->upper_covers[i].push_back(j);
        d->lower_covers[j].push_back(i);
      }
    }
  }
  // |below| strictly increases along the order, so it is a topological key.
  std::vector<ElementIndex> topo(n);
  std::iota(topo.begin(), topo.end(), ElementIndex{0});
  std::vector<std::size_t> depth(n);
  for (ElementIndex i = 0; i < n; ++i) depth[i] = d->below[i].count();
  std::stable_sort(topo.begin(), topo.end(), [&](ElementIndex a, ElementIndex b) { return depth[a] < depth[b]; });
  d->rank.assign(n, 0);
  for (ElementIndex j : topo)
    for (ElementIndex i : d->lower_covers[j]) d->rank[j] = std::max(d->rank[j], d->rank[i] + 1);
  Poset p;
  p.data_ = std::move(d);
  return p;
}

Poset Poset::from_less(std::vector<Label> elements, const std::function<bool(ElementIndex, ElementIndex)>& less) {
  const std::size_t n = elements.size();
  std::vector<Bitset> above(n, Bitset(n));
  for (ElementIndex i = 0; i < n; ++i) {
    for (ElementIndex j = 0; j < n; ++j) {
      if (!less(i, j)) continue;
      if (i == j) throw InputError("order relation is not irreflexive at " + elements[i].str());
      above[i].set(j);
    }
  }
  for (ElementIndex i = 0; i < n; ++i) {
    for (auto j = above[i].find_first(); j != Bitset::npos; j = above[i].find_next(j)) {
      if (above[j].test(i))
        throw InputError("order relation is not antisymmetric on " + elements[i].str() + ", " + elements[j].str());
      if (!above[j].is_subset_of(above[i]))
        throw InputError("order relation is not transitive through " + elements[j].str());
    }
  }
  return from_relation(std::move(elements), std::move(above));
}

Poset Poset::from_covers(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& covers,
                         std::vector<std::pair<Label, Label>>* redundant) {
  const std::size_t n = elements.size();
  std::unordered_map<Label, ElementIndex, LabelHash> lookup;
  for (ElementIndex i = 0; i < n; ++i)
    if (!lookup.emplace(elements[i], i).second) throw InputError("duplicate element label " + elements[i].str());
  auto index = [&](const Label& l) {
    auto it = lookup.find(l);
    if (it == lookup.end()) throw InputError("cover references unknown element " + l.str());
    return it->second;
  };
  std::vector<std::vector<ElementIndex>> up(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : covers) {
    const ElementIndex a = index(lo);
    const ElementIndex b = index(hi);
    if (a == b) throw InputError("cover relation has a cycle at " + lo.str());
    up[a].push_back(b);
    ++indegree[b];
  }
  // Kahn's algorithm; leftovers lie on a cycle.
  std::vector<ElementIndex> order;
  std::vector<ElementIndex> ready;
  for (ElementIndex i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    const ElementIndex i = ready.back();
    ready.pop_back();
    order.push_back(i);
    for (ElementIndex j : up[i])
      if (--indegree[j] == 0) ready.push_back(j);
  }
  if (order.size() != n) {
    for (ElementIndex i = 0; i < n; ++i)
      if (indegree[i] != 0) throw InputError("cover relation has a cycle through " + elements[i].str());
  }
  std::vector<Bitset> above(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (ElementIndex j : up[*it]) {
      above[*it].set(j);
      above[*it] |= above[j];
    }
  }
  Poset p = from_relation(std::move(elements), std::move(above));
  if (redundant) {
    for (const auto& [lo, hi] : covers) {
      const auto& cov = p.upper_covers(index(lo));
      if (std::find(cov.begin(), cov.end(), index(hi)) == cov.end()) redundant->emplace_back(lo, hi);
    }
  }
  return p;
}

std::optional<ElementIndex> Poset::index_of(const Label& l) const {
  auto it = data_->lookup.find(l);
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementIndex> Poset::minimal_elements() const {
  std::vector<ElementIndex> out;
  for (ElementIndex i = 0; i < size(); ++i)
    if (data_->below[i].none()) out.push_back(i);
  return out;
}

std::vector<ElementIndex> Poset::maximal_elements() const {
  std::vector<ElementIndex> out;
  for (ElementIndex i = 0; i < size(); ++i)
    if (data_->above[i].none()) out.push_back(i);
  return out;
}

bool Poset::is_chain(std::span<const ElementIndex> elems) const {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!comparable(elems[i], elems[j])) return false;
  return true;
}

bool Poset::is_antichain(std::span<const ElementIndex> elems) const {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (comparable(elems[i], elems[j])) return false;
  return true;
}

Poset Poset::opposite() const {
  return from_relation(data_->labels, data_->below);
}

Poset Poset::induced(std::span<const ElementIndex> subset) const {
  const std::size_t m = subset.size();
  std::vector<Label> labels;
  labels.reserve(m);
  for (ElementIndex e : subset) labels.push_back(label(e));
  std::vector<Bitset> above(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (less(subset[i], subset[j])) above[i].set(j);
  return from_relation(std::move(labels), std::move(above));
}

std::vector<ElementIndex> Poset::linear_extension() const {
  std::vector<ElementIndex> out(size());
  std::iota(out.begin(), out.end(), ElementIndex{0});
  std::sort(out.begin(), out.end(), [&](ElementIndex a, ElementIndex b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return label(a) < label(b);
  });
  return out;
}

BoundedLattice BoundedLattice::from_poset(Poset p) {
  const std::size_t n = p.size();
  if (n == 0) throw NotALattice("empty poset", Label(), Label());
  const auto mins = p.minimal_elements();
  const auto maxs = p.maximal_elements();
  if (mins.size() != 1) throw NotALattice("no unique minimum", p.label(mins[0]), p.label(mins[1]));
  if (maxs.size() != 1) throw NotALattice("no unique maximum", p.label(maxs[0]), p.label(maxs[1]));

  BoundedLattice l;
  l.bottom_ = mins[0];
  l.top_ = maxs[0];
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  std::vector<Bitset> down(n), up(n);
  for (ElementIndex i = 0; i < n; ++i) {
    down[i] = p.strictly_below(i);
    down[i].set(i);
    up[i] = p.strictly_above(i);
    up[i].set(i);
  }
  // The meet m of a and b is the lower bound whose down-set is the whole
  // common down-set; the same element maximizes the down-set size.
  std::vector<std::size_t> down_count(n), up_count(n);
  for (ElementIndex i = 0; i < n; ++i) {
    down_count[i] = down[i].count();
    up_count[i] = up[i].count();
  }
  auto extremal = [&](const Bitset& common, const std::vector<Bitset>& cone,
                      const std::vector<std::size_t>& counts) -> std::optional<ElementIndex> {
    std::optional<ElementIndex> best;
    std::size_t best_count = 0;
    for (auto k = common.find_first(); k != Bitset::npos; k = common.find_next(k)) {
      const std::size_t c = counts[k];
      if (!best || c > best_count) {
        best = k;
        best_count = c;
      }
    }
    if (best && cone[*best] == common) return best;
    return std::nullopt;
  };
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = a; b < n; ++b) {
      auto m = extremal(down[a] & down[b], down, down_count);
      if (!m) throw NotALattice("no unique meet", p.label(a), p.label(b));
      auto j = extremal(up[a] & up[b], up, up_count);
      if (!j) throw NotALattice("no unique join", p.label(a), p.label(b));
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(*m);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(*j);
    }
  }
  l.poset_ = std::move(p);
  return l;
}

ElementIndex BoundedLattice::meet_set(std::span<const ElementIndex> s) const {
  ElementIndex acc = top_;
  for (ElementIndex x : s) acc = meet(acc, x);
  return acc;
}

ElementIndex BoundedLattice::join_set(std::span<const ElementIndex> s) const {
  ElementIndex acc = bottom_;
  for (ElementIndex x : s) acc = join(acc, x);
  return acc;
}

bool BoundedLattice::is_atomic() const {
  const auto at = atoms();
  for (ElementIndex x = 0; x < size(); ++x) {
    if (x == bottom_) continue;
    ElementIndex acc = bottom_;
    for (ElementIndex a : at)
      if (leq(a, x)) acc = join(acc, a);
    if (acc != x) return false;
  }
  return true;
}

std::vector<ElementIndex> BoundedLattice::proper_elements() const {
  std::vector<ElementIndex> out;
  for (ElementIndex i = 0; i < size(); ++i)
    if (i != bottom_ && i != top_) out.push_back(i);
  return out;
}

MonotoneMap MonotoneMap::verified(const Poset& domain, std::vector<ElementIndex> values) {
  const std::size_t n = domain.size();
  if (values.size() != n) throw InputError("map size does not match its domain");
  bool up = false;
  bool down = false;
  for (ElementIndex x = 0; x < n; ++x) {
    const ElementIndex fx = values[x];
    if (fx >= n) throw InputError("map value out of range");
    if (domain.less(x, fx)) {
      up = true;
    } else if (domain.less(fx, x)) {
      down = true;
    } else if (fx != x) {
      throw InputError("element " + domain.label(x).str() + " is incomparable with its image");
    }
    for (auto y = domain.strictly_above(x).find_first(); y != Bitset::npos; y = domain.strictly_above(x).find_next(y)) {
      if (!domain.leq(fx, values[y]))
        throw InputError("map is not order-preserving on " + domain.label(x).str() + " < " + domain.label(y).str());
    }
  }
  MonotoneMap m;
  m.values_ = std::move(values);
  m.kind_ = up && down ? MapKind::mixed : up ? MapKind::ascending : down ? MapKind::descending : MapKind::identity;
  return m;
}

bool MonotoneMap::is_idempotent() const {
  for (ElementIndex x = 0; x < values_.size(); ++x)
    if (values_[values_[x]] != values_[x]) return false;
  return true;
}

std::vector<ElementIndex> MonotoneMap::fixed_points() const {
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < values_.size(); ++x)
    if (values_[x] == x) out.push_back(x);
  return out;
}

SimplicialComplex order_complex(const Poset& p) {
  std::vector<Simplex> chains;
  Simplex chain;
  std::function<void(ElementIndex)> extend = [&](ElementIndex top) {
    chains.push_back(chain);
    const Bitset& up = p.strictly_above(top);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      chain.push_back(static_cast<VertexIndex>(y));
      extend(y);
      chain.pop_back();
    }
  };
  for (ElementIndex x = 0; x < p.size(); ++x) {
    chain.assign(1, static_cast<VertexIndex>(x));
    extend(x);
  }
  return SimplicialComplex::from_family(std::vector<Label>(p.labels().begin(), p.labels().end()), std::move(chains));
}

Poset proper_part(const BoundedLattice& l) {
  const auto elems = l.proper_elements();
  return l.poset().induced(elems);
}

BoundedLattice sublattice(const BoundedLattice& l, std::span<const ElementIndex> elements) {
  return BoundedLattice::from_poset(l.poset().induced(elements));
}

BoundedLattice atomic_sublattice(const BoundedLattice& l) {
  std::vector<char> in(l.size(), 0);
  std::vector<ElementIndex> members = l.atoms();
  for (ElementIndex a : members) in[a] = 1;
  // Joins of nonempty atom sets = closure of the atoms under binary join.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ElementIndex x = l.join(members[i], members[j]);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  in[l.bottom()] = 1;
  in[l.top()] = 1;
  std::vector<ElementIndex> elems;
  for (ElementIndex i = 0; i < l.size(); ++i)
    if (in[i]) elems.push_back(i);
  return sublattice(l, elems);
}

BoundedLattice boolean_lattice(int n) {
  if (n < 0 || n > 16) throw SizeCapError("boolean lattice rank must be in [0, 16]");
  const std::uint32_t count = 1u << n;
  std::vector<Label> labels;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::string name;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) name += letter_name(i);
    labels.push_back(Label::atom(mask == 0 ? "0" : name));
  }
  return BoundedLattice::from_poset(Poset::from_less(std::move(labels), [](ElementIndex a, ElementIndex b) {
    return a != b && (a & b) == a;
  }));
}

BoundedLattice chain_lattice(int n_elements) {
  if (n_elements < 2) throw InputError("a bounded chain needs at least two elements");
  std::vector<Label> labels;
  labels.push_back(Label::atom("0"));
  for (int i = 1; i + 1 < n_elements; ++i) labels.push_back(Label::atom(std::string(1, static_cast<char>('a' + (i - 1) % 26)) + (i > 26 ? std::to_string(i) : "")));
  labels.push_back(Label::atom("1"));
  return BoundedLattice::from_poset(Poset::from_less(std::move(labels), [](ElementIndex a, ElementIndex b) { return a < b; }));
}

}  // namespace combdeform
