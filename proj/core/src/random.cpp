#include "combdeform/random.hpp"

#include <algorithm>
#include <string>

#include "combdeform/errors.hpp"
#include "combdeform/lattice_complexes.hpp"

namespace combdeform {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return engine_();
  // Rejection keeps the draw unbiased and independent of the standard
  // library's distribution implementation.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return lo + x % span;
}

Graph random_connected_graph(Rng& rng, int min_n, int max_n, std::uint64_t num, std::uint64_t den) {
  const int n = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(min_n), static_cast<std::uint64_t>(max_n)));
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int v = 1; v < n; ++v) {
    const auto u = static_cast<std::size_t>(rng.uniform(0, static_cast<std::uint64_t>(v - 1)));
    adj[u][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][u] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool extra = rng.chance(num, den);
      auto& e = adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (extra) e = 1;
    }
  std::vector<Label> vs;
  std::vector<std::pair<Label, Label>> es;
  for (int u = 0; u < n; ++u) {
    vs.push_back(Label::atom(std::to_string(u)));
    for (int v = u + 1; v < n; ++v)
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        es.emplace_back(Label::atom(std::to_string(u)), Label::atom(std::to_string(v)));
  }
  return Graph::from_edges(vs, es);
}

BoundedLattice random_lattice(Rng& rng, int max_points, int generators, std::size_t max_elements) {
  if (max_points < 2 || max_points > 16 || generators < 1 || max_elements < 3)
    throw InputError("random_lattice: need 2 <= max_points <= 16, generators >= 1, max_elements >= 3");
  // The size is drawn first so that small lattices do not dominate.
  // k generators and the ground set close up to at most 2^k + 1 sets
  const std::uint64_t reachable =
      std::min(std::uint64_t{1} << max_points, (std::uint64_t{1} << std::min(generators, 16)) + 1);
  const std::size_t target = rng.uniform(3, std::min<std::uint64_t>(max_elements, reachable));
  for (;;) {
    const int m = static_cast<int>(rng.uniform(1, static_cast<std::uint64_t>(max_points)));
    const std::uint32_t ground = (1u << m) - 1;
    const int k = static_cast<int>(rng.uniform(1, static_cast<std::uint64_t>(generators)));
    std::vector<std::uint32_t> family{ground};
    for (int i = 0; i < k; ++i) {
      std::uint32_t s = 0;
      for (int p = 0; p < m; ++p)
        if (rng.chance(1, 2)) s |= 1u << p;
      family.push_back(s);
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        const std::uint32_t x = family[i] & family[j];
        if (std::find(family.begin(), family.end(), x) == family.end()) family.push_back(x);
      }
    std::sort(family.begin(), family.end());
    if (family.size() != target) continue;
    std::vector<Label> labels;
    for (std::uint32_t s : family) {
      std::string name = "{";
      for (int p = 0; p < m; ++p)
        if (s & (1u << p)) name += (name.size() > 1 ? "," : "") + std::to_string(p);
      labels.push_back(Label::atom(name + "}"));
    }
    return BoundedLattice::from_poset(Poset::from_less(std::move(labels), [&](ElementIndex i, ElementIndex j) {
      return i != j && (family[i] & ~family[j]) == 0;
    }));
  }
}

std::vector<ElementIndex> random_crosscut(Rng& rng, const BoundedLattice& l, int attempts) {
  const auto proper = l.proper_elements();
  for (int t = 0; t < attempts && !proper.empty(); ++t) {
    std::vector<ElementIndex> order = proper;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);
    std::vector<ElementIndex> c;
    for (ElementIndex x : order)
      if (std::none_of(c.begin(), c.end(), [&](ElementIndex y) { return l.less(x, y) || l.less(y, x); }))
        c.push_back(x);
    std::sort(c.begin(), c.end());
    if (is_crosscut(l, c).valid) return c;
  }
  return l.atoms();
}

}  // namespace combdeform
