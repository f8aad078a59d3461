#include "combdeform/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "combdeform/cw_poset.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/lattice_complexes.hpp"

namespace combdeform {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<std::vector<std::size_t>> all_boundaries(const SimplicialComplex& k) {
  std::vector<std::vector<std::size_t>> out(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = k.boundary_faces(i);
  return out;
}

std::string show(const SimplicialComplex& k, std::size_t i) {
  const auto labels = k.labels(k.simplex(i));
  std::string out = "{";
  for (std::size_t j = 0; j < labels.size(); ++j) out += (j ? "," : "") + labels[j].str();
  return out + "}";
}

// partner[i] = matched simplex of i, validated.
std::vector<std::size_t> partners(const PartialMatching& m) {
  const SimplicialComplex& k = *m.complex;
  std::vector<std::size_t> partner(k.size(), kNone);
  for (const auto& [lo, up] : m.pairs) {
    if (lo >= k.size() || up >= k.size()) throw InputError("matched simplex index out of range");
    const Simplex& a = k.simplex(lo);
    const Simplex& b = k.simplex(up);
    if (b.size() != a.size() + 1 || !std::includes(b.begin(), b.end(), a.begin(), a.end()))
      throw InputError("matched pair " + show(k, lo) + ", " + show(k, up) + " is not a cover");
    if (partner[lo] != kNone || partner[up] != kNone)
      throw InputError("simplex matched twice near " + show(k, lo));
    partner[lo] = up;
    partner[up] = lo;
  }
  return partner;
}

Simplex with_vertex(Simplex s, VertexIndex v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

MorseMatching pivot_matching(const Poset& q, const MonotoneMap& f, bool ascending) {
  if (f.values().size() != q.size()) throw InputError("map does not match the poset");
  if (ascending ? !f.is_ascending() : !f.is_descending())
    throw InputError(ascending ? "closure matching needs an ascending map" : "interior matching needs a descending map");
  if (!f.is_idempotent()) throw InputError("pivot matchings need an idempotent map");
  auto delta = std::make_shared<const SimplicialComplex>(order_complex(q));
  std::vector<ElementIndex> elem(delta->vertex_count());
  std::vector<VertexIndex> vert(q.size());
  for (VertexIndex v = 0; v < delta->vertex_count(); ++v) {
    elem[v] = *q.index_of(delta->vertex(v));
    vert[elem[v]] = v;
  }
  PartialMatching m{delta, {}};
  for (std::size_t i = 0; i < delta->size(); ++i) {
    const Simplex& c = delta->simplex(i);
    std::optional<ElementIndex> pivot;
    for (VertexIndex v : c) {
      const ElementIndex x = elem[v];
      if (f(x) == x) continue;
      if (!pivot || (ascending ? q.less(*pivot, x) : q.less(x, *pivot))) pivot = x;
    }
    if (!pivot) continue;
    const VertexIndex target = vert[f(*pivot)];
    if (std::binary_search(c.begin(), c.end(), target)) continue;
    auto up = delta->find(with_vertex(c, target));
    if (!up) throw InternalError("pivot partner of " + show(*delta, i) + " is not a chain");
    m.pairs.emplace_back(i, *up);
  }
  const auto report = check_acyclic(m);
  if (!report.acyclic) throw InternalError("pivot matching has a cycle through " + show(*delta, report.cycle.front()));
  SimplicialComplex critical = delta->induced([&](VertexIndex v) { return f(elem[v]) == elem[v]; });
  return MorseMatching{std::move(m), std::move(critical)};
}

MorseMatching face_matching(const SimplicialComplex& k, const std::function<std::size_t(std::size_t)>& f,
                            bool ascending) {
  const RegularCWPoset fp = face_poset(k);
  std::vector<ElementIndex> values(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) values[i] = f(i);
  const MonotoneMap map = MonotoneMap::verified(fp.order, std::move(values));
  return pivot_matching(fp.order, map, ascending);
}

}  // namespace

std::vector<std::size_t> PartialMatching::critical() const {
  std::vector<char> used(complex->size(), 0);
  for (const auto& [lo, up] : pairs) used.at(lo) = used.at(up) = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

AcyclicityReport check_acyclic(const PartialMatching& m) {
  const SimplicialComplex& k = *m.complex;
  const auto partner = partners(m);
  const auto bd = all_boundaries(k);
  AcyclicityReport r;
  r.critical = m.critical();

  auto is_lower = [&](std::size_t x) {
    return partner[x] != kNone && k.simplex(partner[x]).size() > k.simplex(x).size();
  };
  // Out-neighbours: matched up-edge, or down-edges to faces other than the
  // matched lower partner.
  auto successors = [&](std::size_t x, std::vector<std::size_t>& out) {
    out.clear();
    if (is_lower(x)) out.push_back(partner[x]);
    for (std::size_t f : bd[x])
      if (partner[x] != f) out.push_back(f);
  };
  std::vector<char> color(k.size(), 0);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
  std::vector<std::size_t> succ;
  for (std::size_t root = 0; root < k.size(); ++root) {
    if (color[root]) continue;
    successors(root, succ);
    stack.emplace_back(root, succ);
    color[root] = 1;
    while (!stack.empty()) {
      auto& [node, pending] = stack.back();
      if (pending.empty()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t next = pending.back();
      pending.pop_back();
      if (color[next] == 1) {
        r.acyclic = false;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& e) { return e.first == next; });
        for (; it != stack.end(); ++it) r.cycle.push_back(it->first);
        return r;
      }
      if (color[next] == 0) {
        color[next] = 1;
        successors(next, succ);
        stack.emplace_back(next, succ);
      }
    }
  }
  return r;
}

DeformationCertificate matching_to_collapses(const PartialMatching& m, const SimplicialComplex& target) {
  const SimplicialComplex& k = *m.complex;
  const auto partner = partners(m);
  const auto bd = all_boundaries(k);
  std::vector<std::size_t> count(k.size(), 0);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t f : bd[i]) ++count[f];
  std::vector<char> present(k.size(), 1);

  auto upper_of = [&](std::size_t x) -> std::size_t {
    if (partner[x] == kNone) return kNone;
    return k.simplex(partner[x]).size() > k.simplex(x).size() ? partner[x] : x;
  };
  auto emissible = [&](std::size_t up) {
    const std::size_t lo = partner[up];
    return present[up] && present[lo] && count[up] == 0 && count[lo] == 1;
  };
  // Larger simplices first; within a dimension the lower index first.
  auto later = [&](std::size_t a, std::size_t b) {
    if (k.simplex(a).size() != k.simplex(b).size()) return k.simplex(a).size() < k.simplex(b).size();
    return a > b;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> queue(later);
  for (const auto& [lo, up] : m.pairs)
    if (emissible(up)) queue.push(up);

  auto touch = [&](std::size_t x) {
    const std::size_t up = upper_of(x);
    if (up != kNone && emissible(up)) queue.push(up);
  };
  std::vector<DeformationStep> steps;
  steps.reserve(m.pairs.size());
  while (!queue.empty()) {
    const std::size_t up = queue.top();
    queue.pop();
    if (!emissible(up)) continue;
    const std::size_t lo = partner[up];
    steps.push_back({StepKind::collapse, k.labels(k.simplex(lo)), k.labels(k.simplex(up))});
    present[up] = 0;
    present[lo] = 0;
    for (std::size_t f : bd[up]) --count[f];
    for (std::size_t f : bd[lo]) --count[f];
    for (std::size_t f : bd[up])
      if (f != lo) touch(f);
    for (std::size_t f : bd[lo]) touch(f);
  }
  std::vector<std::size_t> left;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (present[i]) left.push_back(i);
  if (steps.size() != m.pairs.size()) {
    std::string dump;
    for (std::size_t i : left)
      if (partner[i] != kNone && dump.size() < 400)
        dump += " " + show(k, i) + "[cofaces=" + std::to_string(count[i]) + "]";
    throw InternalError("collapse schedule stuck with " + std::to_string(m.pairs.size() - steps.size()) +
                        " pairs left:" + dump);
  }
  SimplicialComplex end = k.closure_of(left);
  if (!(end == target)) throw InternalError("critical cells do not form the target subcomplex");
  return DeformationCertificate(k, std::move(steps), std::move(end));
}

MorseMatching closure_matching(const Poset& q, const MonotoneMap& phi) { return pivot_matching(q, phi, true); }

MorseMatching interior_matching(const Poset& q, const MonotoneMap& psi) { return pivot_matching(q, psi, false); }

MorseMatching closure_matching(const SimplicialComplex& k, const std::function<std::size_t(std::size_t)>& phi) {
  return face_matching(k, phi, true);
}

MorseMatching interior_matching(const SimplicialComplex& k, const std::function<std::size_t(std::size_t)>& psi) {
  return face_matching(k, psi, false);
}

std::vector<std::size_t> jl_order(const BoundedLattice& l) {
  std::vector<std::size_t> pos(l.size());
  const auto ext = l.poset().linear_extension();
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
  return pos;
}

JLData jl_data(const BoundedLattice& l, const std::vector<std::size_t>& order, std::vector<ElementIndex> s) {
  std::sort(s.begin(), s.end(), [&](ElementIndex a, ElementIndex b) { return order[a] < order[b]; });
  JLData d;
  const std::size_t t = s.size();
  while (d.k < t) {
    bool below_rest = true;
    for (std::size_t i = d.k + 1; i < t && below_rest; ++i) below_rest = l.less(s[d.k], s[i]);
    if (!below_rest) break;
    ++d.k;
  }
  if (d.k == t) return d;
  ElementIndex meet = l.top();
  for (std::size_t i = d.k; i < t; ++i) meet = l.meet(meet, s[i]);
  d.a = meet;
  return d;
}

namespace {

// Pairs S with S + a(S) on a complex whose vertices are elements of l.
PartialMatching jl_pairs(const BoundedLattice& l, std::shared_ptr<const SimplicialComplex> k, bool restricted) {
  const auto order = jl_order(l);
  std::vector<ElementIndex> elem(k->vertex_count());
  std::vector<std::optional<VertexIndex>> vert(l.size());
  for (VertexIndex v = 0; v < k->vertex_count(); ++v) {
    elem[v] = *l.index_of(k->vertex(v));
    vert[elem[v]] = v;
  }
  PartialMatching m{k, {}};
  std::vector<ElementIndex> s;
  for (std::size_t i = 0; i < k->size(); ++i) {
    const Simplex& simplex = k->simplex(i);
    s.clear();
    for (VertexIndex v : simplex) s.push_back(elem[v]);
    const JLData d = jl_data(l, order, s);
    if (!d.a || std::find(s.begin(), s.end(), *d.a) != s.end()) continue;
    std::optional<std::size_t> up;
    if (vert[*d.a]) up = k->find(with_vertex(simplex, *vert[*d.a]));
    if (!up) {
      if (restricted) throw ClosureViolation("matching leaves the subcomplex at " + show(*k, i));
      throw InternalError("S + a(S) is not a simplex at " + show(*k, i));
    }
    m.pairs.emplace_back(i, *up);
  }
  const auto report = check_acyclic(m);
  if (!report.acyclic) throw InternalError("J(L) matching has a cycle through " + show(*k, report.cycle.front()));
  return m;
}

}  // namespace

MorseMatching jl_matching(const BoundedLattice& l) {
  auto k = std::make_shared<const SimplicialComplex>(bounded_below_complex(l));
  PartialMatching m = jl_pairs(l, k, false);
  return MorseMatching{std::move(m), order_complex(proper_part(l))};
}

MorseMatching restricted_jl_matching(const Graph& g) {
  const LovaszLattice ll = lovasz_lattice(g);
  auto k = std::make_shared<const SimplicialComplex>(gamma_p_description(g));
  PartialMatching m = jl_pairs(ll.lattice, k, true);
  return MorseMatching{std::move(m), lovasz_complex(g).complex};
}

}  // namespace combdeform
