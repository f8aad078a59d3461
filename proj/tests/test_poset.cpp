#include <gtest/gtest.h>

#include "combdeform/graph_complexes.hpp"
#include "combdeform/poset.hpp"
#include "combdeform/random.hpp"
#include "oracles.hpp"

using namespace combdeform;
using oracle::L;

namespace {

Poset bowtie() {
  // 0 < a, b < c, d < 1 : a and b have two minimal upper bounds
  return Poset::from_covers({L("0"), L("a"), L("b"), L("c"), L("d"), L("1")},
                            {{L("0"), L("a")},
                             {L("0"), L("b")},
                             {L("a"), L("c")},
                             {L("a"), L("d")},
                             {L("b"), L("c")},
                             {L("b"), L("d")},
                             {L("c"), L("1")},
                             {L("d"), L("1")}});
}

// Greatest lower bound by scanning every element.
ElementIndex glb(const BoundedLattice& l, ElementIndex a, ElementIndex b) {
  std::vector<ElementIndex> lower;
  for (ElementIndex x = 0; x < l.size(); ++x)
    if (l.leq(x, a) && l.leq(x, b)) lower.push_back(x);
  for (ElementIndex x : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](ElementIndex y) { return l.leq(y, x); })) return x;
  return l.size();
}

}  // namespace

TEST(Poset, CoversAndTransitivity) {
  std::vector<std::pair<Label, Label>> redundant;
  const Poset p = Poset::from_covers({L("x"), L("y"), L("z")}, {{L("x"), L("y")}, {L("y"), L("z")}, {L("x"), L("z")}},
                                     &redundant);
  const auto x = *p.index_of(L("x")), z = *p.index_of(L("z"));
  EXPECT_TRUE(p.less(x, z));
  EXPECT_EQ(p.upper_covers(x).size(), 1u);
  ASSERT_EQ(redundant.size(), 1u);
  EXPECT_EQ(redundant[0], std::make_pair(L("x"), L("z")));
  EXPECT_EQ(p.rank(z), 2);
}

TEST(Poset, RejectsCyclesAndUnknownLabels) {
  EXPECT_THROW(Poset::from_covers({L("x"), L("y")}, {{L("x"), L("y")}, {L("y"), L("x")}}), InputError);
  EXPECT_THROW(Poset::from_covers({L("x")}, {{L("x"), L("q")}}), InputError);
  EXPECT_THROW(Poset::from_less({L("x"), L("y")}, [](ElementIndex, ElementIndex) { return true; }), InputError);
}

TEST(Poset, LinearExtensionRespectsOrder) {
  const Poset p = bowtie();
  const auto ext = p.linear_extension();
  std::vector<std::size_t> pos(p.size());
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
  for (ElementIndex a = 0; a < p.size(); ++a)
    for (ElementIndex b = 0; b < p.size(); ++b)
      if (p.less(a, b)) EXPECT_LT(pos[a], pos[b]);
}

TEST(Poset, ChainsAntichainsOppositeInduced) {
  const Poset p = bowtie();
  const auto a = *p.index_of(L("a")), b = *p.index_of(L("b")), c = *p.index_of(L("c"));
  EXPECT_TRUE(p.is_antichain(std::vector<ElementIndex>{a, b}));
  EXPECT_TRUE(p.is_chain(std::vector<ElementIndex>{a, c}));
  EXPECT_FALSE(p.is_chain(std::vector<ElementIndex>{a, b}));
  EXPECT_TRUE(p.opposite().less(c, a));
  const Poset q = p.induced(std::vector<ElementIndex>{a, c});
  EXPECT_EQ(q.size(), 2u);
  EXPECT_TRUE(q.less(0, 1));
}

TEST(Lattice, BowtieIsNotALattice) { EXPECT_THROW(as_lattice(bowtie()), NotALattice); }

TEST(Lattice, MissingBoundIsReported) {
  const Poset p = Poset::from_covers({L("a"), L("b"), L("1")}, {{L("a"), L("1")}, {L("b"), L("1")}});
  EXPECT_THROW(as_lattice(p), NotALattice);
}

TEST(Lattice, MeetsMatchScan) {
  Rng rng(3);
  std::vector<BoundedLattice> ls{boolean_lattice(3), partition_lattice(4).lattice, chain_lattice(4)};
  for (int i = 0; i < 15; ++i) ls.push_back(random_lattice(rng, 5, 5, 14));
  for (const auto& l : ls)
    for (ElementIndex a = 0; a < l.size(); ++a)
      for (ElementIndex b = 0; b < l.size(); ++b) {
        EXPECT_EQ(l.meet(a, b), glb(l, a, b));
        EXPECT_EQ(l.join(a, b), glb(BoundedLattice::from_poset(l.poset().opposite()), a, b));
      }
}

TEST(Lattice, SetMeetAndJoinDefaults) {
  const auto l = boolean_lattice(3);
  EXPECT_EQ(l.meet_set({}), l.top());
  EXPECT_EQ(l.join_set({}), l.bottom());
  const auto atoms = l.atoms();
  EXPECT_EQ(l.join_set(atoms), l.top());
}

TEST(Lattice, Atomicity) {
  EXPECT_TRUE(boolean_lattice(3).is_atomic());
  EXPECT_TRUE(partition_lattice(4).lattice.is_atomic());
  EXPECT_FALSE(chain_lattice(4).is_atomic());
  EXPECT_FALSE(chain_lattice(3).is_atomic());  // the top is not a join of atoms
  const auto a = atomic_sublattice(chain_lattice(5));
  EXPECT_EQ(a.size(), 3u);
}

TEST(Lattice, PartitionLatticeSizesAreBellNumbers) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(partition_lattice(n).lattice.size(), bell[n]) << n;
  EXPECT_THROW(partition_lattice(8), SizeCapError);
}

TEST(Lattice, BooleanLattice) {
  const auto l = boolean_lattice(4);
  EXPECT_EQ(l.size(), 16u);
  EXPECT_EQ(l.atoms().size(), 4u);
  EXPECT_EQ(l.label(l.bottom()), L("0"));
}

TEST(MonotoneMap, VerifiesOrderAndComparability) {
  const auto l = chain_lattice(4);
  const Poset& p = l.poset();
  std::vector<ElementIndex> up(p.size());
  for (ElementIndex x = 0; x < p.size(); ++x) up[x] = l.top();
  const auto m = MonotoneMap::verified(p, up);
  EXPECT_TRUE(m.is_ascending());
  EXPECT_TRUE(m.is_idempotent());
  EXPECT_EQ(m.fixed_points(), std::vector<ElementIndex>{l.top()});

  const Poset b = boolean_lattice(2).poset();
  const auto x = *b.index_of(L("x")), y = *b.index_of(L("y"));
  std::vector<ElementIndex> swap(b.size());
  for (ElementIndex i = 0; i < b.size(); ++i) swap[i] = i;
  std::swap(swap[x], swap[y]);
  EXPECT_THROW(MonotoneMap::verified(b, swap), InputError);
}

TEST(OrderComplex, MatchesChainEnumeration) {
  for (const auto& l : {boolean_lattice(3), partition_lattice(4).lattice, chain_lattice(5)})
    EXPECT_EQ(oracle::faces_of(order_complex(proper_part(l))), oracle::proper_chains(l));
  // two incomparable atoms: two points
  EXPECT_EQ(order_complex(proper_part(boolean_lattice(2))).f_vector(), std::vector<std::size_t>{2});
}
