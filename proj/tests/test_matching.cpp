#include <gtest/gtest.h>

#include "combdeform/deformation.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/homology.hpp"
#include "combdeform/lattice_complexes.hpp"
#include "combdeform/matching.hpp"
#include "combdeform/random.hpp"
#include "oracles.hpp"

using namespace combdeform;
using oracle::cx;
using oracle::face;
using oracle::L;

namespace {

PartialMatching matching_on(const SimplicialComplex& k, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
  PartialMatching m{std::make_shared<const SimplicialComplex>(k), {}};
  for (const auto& [lo, up] : pairs) m.pairs.emplace_back(*k.find(face(lo)), *k.find(face(up)));
  return m;
}

}  // namespace

TEST(Acyclic, GradientAroundATriangleIsCyclic) {
  const auto k = cx({{1, 2}, {2, 3}, {1, 3}});
  const auto m = matching_on(k, {{{1}, {1, 2}}, {{2}, {2, 3}}, {{3}, {1, 3}}});
  const auto r = check_acyclic(m);
  EXPECT_FALSE(r.acyclic);
  EXPECT_FALSE(r.cycle.empty());
}

TEST(Acyclic, PathMatchingIsAcyclic) {
  const auto k = cx({{1, 2}, {2, 3}, {1, 3}});
  const auto m = matching_on(k, {{{2}, {1, 2}}, {{3}, {2, 3}}});
  const auto r = check_acyclic(m);
  EXPECT_TRUE(r.acyclic);
  EXPECT_EQ(r.critical.size(), 2u);  // vertex 1 and edge 13
}

TEST(Acyclic, MalformedMatchingsAreRejected) {
  const auto k = cx({{1, 2, 3}});
  EXPECT_THROW(check_acyclic(matching_on(k, {{{1}, {1, 2, 3}}})), InputError);
  EXPECT_THROW(check_acyclic(matching_on(k, {{{1}, {1, 2}}, {{1}, {1, 3}}})), InputError);
}

TEST(Collapses, FollowTheMatching) {
  const auto k = cx({{1, 2, 3}});
  const auto m = matching_on(k, {{{2, 3}, {1, 2, 3}}, {{2}, {1, 2}}, {{3}, {1, 3}}});
  const auto c = matching_to_collapses(m, cx({{1}}));
  EXPECT_TRUE(verify_certificate(c).ok);
  EXPECT_EQ(c.steps().front().coface, face({1, 2, 3}));
  EXPECT_THROW(matching_to_collapses(m, cx({{2}})), InternalError);
}

TEST(JL, DataOnChainsAndAntichains) {
  const auto l = boolean_lattice(3);
  const auto order = jl_order(l);
  const auto x = *l.index_of(L("x")), xy = *l.index_of(L("xy")), xz = *l.index_of(L("xz"));
  const auto chain = jl_data(l, order, {x, xy});
  EXPECT_EQ(chain.k, 2u);
  EXPECT_FALSE(chain.a.has_value());
  const auto pair = jl_data(l, order, {xy, xz});
  ASSERT_TRUE(pair.a.has_value());
  EXPECT_EQ(*pair.a, x);
}

TEST(JL, CriticalCellsAreChains) {
  Rng rng(2);
  std::vector<BoundedLattice> ls{boolean_lattice(2), boolean_lattice(3), partition_lattice(4).lattice,
                                 chain_lattice(3)};
  for (int i = 0; i < 20; ++i) ls.push_back(random_lattice(rng, 5, 6, 12));
  for (const auto& l : ls) {
    const auto m = jl_matching(l);
    EXPECT_TRUE(check_acyclic(m.matching).acyclic);
    EXPECT_EQ(oracle::faces_of(m.critical), oracle::proper_chains(l));
    const auto c = matching_to_collapses(m);
    EXPECT_TRUE(verify_certificate(c).ok);
    EXPECT_EQ(c.start(), bounded_below_complex(l));
  }
}

TEST(JL, BooleanLatticeOfThreeGoesToHexagon) {
  const auto c = jl_deformation(boolean_lattice(3));
  EXPECT_EQ(c.end().f_vector(), (std::vector<std::size_t>{6, 6}));
  EXPECT_EQ(c.expansion_count(), 0u);
}

TEST(Closure, MatchingOnAChainPoset) {
  // a < b < c with everything sent to c: Delta collapses to the point c
  const auto l = chain_lattice(5);
  const Poset q = proper_part(l);
  std::vector<ElementIndex> up(q.size(), *q.index_of(L("c")));
  const auto m = closure_matching(q, MonotoneMap::verified(q, up));
  EXPECT_EQ(m.critical.f_vector(), std::vector<std::size_t>{1});
  EXPECT_TRUE(verify_certificate(matching_to_collapses(m)).ok);
}

TEST(Closure, RejectsNonIdempotentMaps) {
  const auto l = chain_lattice(5);
  const Poset q = proper_part(l);
  const auto a = *q.index_of(L("a")), b = *q.index_of(L("b")), c = *q.index_of(L("c"));
  std::vector<ElementIndex> step(q.size());
  step[a] = b;
  step[b] = c;
  step[c] = c;
  EXPECT_ANY_THROW(closure_matching(q, MonotoneMap::verified(q, step)));
}

TEST(Closure, NeighborhoodCriticalsAreLovaszChains) {
  Rng rng(8);
  std::vector<Graph> gs{complete_graph(3), cycle_graph(5), path_graph(4)};
  for (int i = 0; i < 10; ++i) gs.push_back(random_connected_graph(rng, 2, 6, 1, 3));
  for (const auto& g : gs) {
    const auto m = neighborhood_lovasz_matching(g);
    EXPECT_EQ(oracle::faces_of(m.critical), oracle::lovasz(oracle::PlainGraph(g)));
  }
}

TEST(RestrictedJL, StaysInsideGammaP) {
  for (const auto& g : {complete_graph(3), complete_graph(4), cycle_graph(5), cycle_graph(6), path_graph(4)}) {
    const auto m = restricted_jl_matching(g);
    EXPECT_EQ(*m.matching.complex, gamma_p_description(g));
    EXPECT_EQ(m.critical, lovasz_complex(g).complex);
    EXPECT_TRUE(check_acyclic(m.matching).acyclic);
  }
}

TEST(BruteForce, AgreesWithMatchingExistence) {
  Rng rng(4);
  for (int i = 0; i < 12; ++i) {
    const auto l = random_lattice(rng, 4, 4, 7);
    const auto m = jl_matching(l);
    if (m.matching.complex->size() > 18) continue;
    EXPECT_TRUE(brute_force_collapse_search(*m.matching.complex, m.critical).has_value());
  }
}
