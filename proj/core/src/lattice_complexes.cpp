#include "combdeform/lattice_complexes.hpp"

#include <algorithm>
#include <deque>

namespace combdeform {
namespace {

struct Fold {
  ElementIndex join;
  ElementIndex meet;
};

// Down-closed family of subsets of `members`: `keep` decides whether a set
// (given its running join and meet) is a simplex, and must be monotone.
template <class Keep>
SimplicialComplex subset_complex(const BoundedLattice& l, const std::vector<ElementIndex>& members, Keep keep) {
  std::vector<Label> verts;
  for (ElementIndex m : members) verts.push_back(l.label(m));
  std::vector<Simplex> family;
  Simplex current;
  auto extend = [&](auto&& self, std::size_t from, Fold f) -> void {
    for (std::size_t i = from; i < members.size(); ++i) {
      const Fold g{l.join(f.join, members[i]), l.meet(f.meet, members[i])};
      if (!keep(g)) continue;
      current.push_back(static_cast<VertexIndex>(i));
      family.push_back(current);
      self(self, i + 1, g);
      current.pop_back();
    }
  };
  extend(extend, 0, Fold{l.bottom(), l.top()});
  // Vertices failing `keep` on their own are dropped from the table.
  std::vector<char> used(members.size(), 0);
  for (const auto& s : family)
    if (s.size() == 1) used[s[0]] = 1;
  std::vector<VertexIndex> remap(members.size());
  std::vector<Label> kept;
  for (std::size_t i = 0; i < members.size(); ++i) {
    remap[i] = static_cast<VertexIndex>(kept.size());
    if (used[i]) kept.push_back(verts[i]);
  }
  for (auto& s : family)
    for (auto& v : s) v = remap[v];
  return SimplicialComplex::from_family(std::move(kept), std::move(family));
}

std::vector<ElementIndex> binary_closure(const BoundedLattice& l, std::span<const ElementIndex> c, bool use_join) {
  std::vector<char> in(l.size(), 0);
  std::vector<ElementIndex> out;
  for (ElementIndex x : c)
    if (!in[x]) {
      in[x] = 1;
      out.push_back(x);
    }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const ElementIndex z = use_join ? l.join(out[i], out[j]) : l.meet(out[i], out[j]);
      if (!in[z]) {
        in[z] = 1;
        out.push_back(z);
      }
    }
  }
  return out;
}

void require_crosscut(const BoundedLattice& l, std::span<const ElementIndex> c) {
  const auto report = is_crosscut(l, c);
  if (!report.valid) throw InputError("invalid crosscut: " + report.describe(l));
}

}  // namespace

SimplicialComplex atom_crosscut_complex(const BoundedLattice& l) {
  const auto atoms = l.atoms();
  auto k = subset_complex(l, atoms, [&](const Fold& f) { return f.join != l.top(); });
  if (k.empty()) throw InputError("lattice has no atom below the top; the atom crosscut complex is empty");
  return k;
}

std::string CrosscutReport::describe(const BoundedLattice& l) const {
  if (valid) return "valid crosscut";
  std::string out;
  for (ElementIndex x : not_proper)
    out += (out.empty() ? "" : "; ") + std::string("member ") +
           (x < l.size() ? l.label(x).str() : std::to_string(x)) + " is not in bar L";
  for (const auto& [a, b] : comparable)
    out += (out.empty() ? "" : "; ") + std::string("not an antichain: ") + l.label(a).str() + " < " + l.label(b).str();
  if (unsaturated_chain) {
    out += (out.empty() ? "" : "; ") + std::string("maximal chain avoids C:");
    for (ElementIndex x : *unsaturated_chain) out += " " + l.label(x).str();
  }
  return out;
}

CrosscutReport is_crosscut(const BoundedLattice& l, std::span<const ElementIndex> c) {
  CrosscutReport r;
  std::vector<char> member(l.size(), 0);
  for (ElementIndex x : c) {
    if (x >= l.size() || x == l.bottom() || x == l.top()) {
      r.not_proper.push_back(x);
      continue;
    }
    member[x] = 1;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[i] < l.size() && c[j] < l.size() && l.less(c[i], c[j])) r.comparable.emplace_back(c[i], c[j]);

  // A bottom-to-top path in the cover graph is a maximal chain.
  std::vector<ElementIndex> parent(l.size(), l.size());
  std::deque<ElementIndex> queue{l.bottom()};
  parent[l.bottom()] = l.bottom();
  while (!queue.empty()) {
    const ElementIndex x = queue.front();
    queue.pop_front();
    for (ElementIndex y : l.poset().upper_covers(x)) {
      if (member[y] || parent[y] != l.size()) continue;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (parent[l.top()] != l.size() && l.top() != l.bottom()) {
    std::vector<ElementIndex> chain{l.top()};
    while (chain.back() != l.bottom()) chain.push_back(parent[chain.back()]);
    std::reverse(chain.begin(), chain.end());
    r.unsaturated_chain = std::move(chain);
  }
  r.valid = r.not_proper.empty() && r.comparable.empty() && !r.unsaturated_chain && !c.empty();
  return r;
}

SimplicialComplex crosscut_complex(const BoundedLattice& l, std::span<const ElementIndex> c) {
  require_crosscut(l, c);
  std::vector<ElementIndex> members(c.begin(), c.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return subset_complex(l, members, [&](const Fold& f) { return f.join != l.top() || f.meet != l.bottom(); });
}

SimplicialComplex bounded_below_complex(const BoundedLattice& l) {
  const auto proper = l.proper_elements();
  return subset_complex(l, proper, [&](const Fold& f) { return f.meet != l.bottom(); });
}

std::vector<ElementIndex> crosscut_elements(const BoundedLattice& l, std::span<const ElementIndex> c) {
  std::vector<char> in(l.size(), 0);
  for (ElementIndex x : binary_closure(l, c, true)) in[x] = 1;
  for (ElementIndex x : binary_closure(l, c, false)) in[x] = 1;
  in[l.bottom()] = 1;
  in[l.top()] = 1;
  std::vector<ElementIndex> out;
  for (ElementIndex x = 0; x < l.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

Poset crosscut_subposet(const BoundedLattice& l, std::span<const ElementIndex> c) {
  const auto elems = crosscut_elements(l, c);
  return l.poset().induced(elems);
}

BoundedLattice crosscut_sublattice(const BoundedLattice& l, std::span<const ElementIndex> c) {
  return BoundedLattice::from_poset(crosscut_subposet(l, c));
}

namespace {

struct Sides {
  std::vector<char> above;  // x in L_{>=C}
  std::vector<char> below;  // x in L_{<=C}
};

Sides sides_of(const BoundedLattice& l, std::span<const ElementIndex> c) {
  Sides s{std::vector<char>(l.size(), 0), std::vector<char>(l.size(), 0)};
  for (ElementIndex m : c)
    for (ElementIndex x = 0; x < l.size(); ++x) {
      if (l.leq(m, x)) s.above[x] = 1;
      if (l.leq(x, m)) s.below[x] = 1;
    }
  return s;
}

ElementIndex join_below(const BoundedLattice& l, std::span<const ElementIndex> c, ElementIndex x) {
  ElementIndex acc = l.bottom();
  for (ElementIndex m : c)
    if (l.leq(m, x)) acc = l.join(acc, m);
  return acc;
}

ElementIndex meet_above(const BoundedLattice& l, std::span<const ElementIndex> c, ElementIndex x) {
  ElementIndex acc = l.top();
  for (ElementIndex m : c)
    if (l.leq(x, m)) acc = l.meet(acc, m);
  return acc;
}

std::vector<ElementIndex> positions(const std::vector<ElementIndex>& elems, std::size_t n) {
  std::vector<ElementIndex> pos(n, n);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  return pos;
}

}  // namespace

MonotoneMap crosscut_map(const BoundedLattice& l, std::span<const ElementIndex> c) {
  require_crosscut(l, c);
  const auto proper = l.proper_elements();
  const auto pos = positions(proper, l.size());
  const Sides s = sides_of(l, c);
  std::vector<ElementIndex> values;
  for (ElementIndex x : proper) {
    ElementIndex y = s.above[x] ? join_below(l, c, x) : s.below[x] ? meet_above(l, c, x) : l.size();
    if (y == l.size()) throw InternalError("element " + l.label(x).str() + " is comparable with no crosscut member");
    values.push_back(pos[y]);
  }
  return MonotoneMap::verified(proper_part(l), std::move(values));
}

CrosscutStages crosscut_stages(const BoundedLattice& l, std::span<const ElementIndex> c) {
  require_crosscut(l, c);
  const Sides s = sides_of(l, c);
  auto proper = l.proper_elements();
  const auto pos = positions(proper, l.size());
  Poset domain = proper_part(l);
  std::vector<ElementIndex> lower_values;
  for (ElementIndex x : proper) lower_values.push_back(s.above[x] ? pos[join_below(l, c, x)] : pos[x]);
  MonotoneMap lower = MonotoneMap::verified(domain, std::move(lower_values));

  std::vector<ElementIndex> middle_elements;
  for (ElementIndex i : lower.fixed_points()) middle_elements.push_back(proper[i]);
  const auto mpos = positions(middle_elements, l.size());
  Poset middle = l.poset().induced(middle_elements);
  std::vector<ElementIndex> upper_values;
  for (ElementIndex y : middle_elements) {
    const ElementIndex z = s.below[y] ? meet_above(l, c, y) : y;
    if (mpos[z] == l.size()) throw InternalError("crosscut stage image leaves its domain at " + l.label(y).str());
    upper_values.push_back(mpos[z]);
  }
  MonotoneMap upper = MonotoneMap::verified(middle, std::move(upper_values));
  return CrosscutStages{std::move(domain), std::move(proper), std::move(lower), std::move(middle),
                        std::move(middle_elements), std::move(upper)};
}

MonotoneMap atom_join_map(const BoundedLattice& l) {
  const auto proper = l.proper_elements();
  const auto pos = positions(proper, l.size());
  const auto atoms = l.atoms();
  std::vector<ElementIndex> values;
  for (ElementIndex x : proper) {
    const ElementIndex y = join_below(l, atoms, x);
    if (pos[y] == l.size()) throw InternalError("atom join leaves bar L at " + l.label(x).str());
    values.push_back(pos[y]);
  }
  return MonotoneMap::verified(proper_part(l), std::move(values));
}

}  // namespace combdeform
