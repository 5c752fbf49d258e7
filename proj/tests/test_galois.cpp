#include "bruhat/error.hpp"
#include "bruhat/galois.hpp"
#include "bruhat/parabolic.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace bruhat;
using bruhat::test::group;
using bruhat::test::word;

namespace {

DiagramAutomorphism perm(const WeylGroup& g, std::vector<int> p) { return validate_automorphism(p, g.cartan()); }

}  // namespace

TEST(DefinitionDegree, Examples) {
  const auto a2 = group("A2");
  EXPECT_EQ(definition_degree(TypeSubset{0}, DiagramAutomorphism::identity(2)), 1);
  EXPECT_EQ(definition_degree(TypeSubset{1}, perm(a2, {1, 0})), 2);
  EXPECT_EQ(definition_degree(TypeSubset{}, perm(a2, {1, 0})), 1);
  const auto a1a1 = group("A1xA1");
  EXPECT_EQ(definition_degree(TypeSubset{}, perm(a1a1, {1, 0})), 1);
  EXPECT_EQ(definition_degree(TypeSubset{0}, perm(a1a1, {1, 0})), 2);
}

TEST(DefinitionDegree, DividesAutomorphismOrder) {
  const auto g = group("A1xA1xA1");
  const auto phi = perm(g, {1, 2, 0});
  for (const auto& J : test::all_subsets(3)) {
    const int d = definition_degree(J, phi);
    EXPECT_EQ(phi.order() % d, 0);
    EXPECT_EQ(J.image(phi.power(d)), J);
    for (int e = 1; e < d; ++e) EXPECT_NE(J.image(phi.power(e)), J);
  }
}

TEST(Orbits, IdentityGivesSingletons) {
  const auto g = group("A3");
  const auto all = enumerate_group(g);
  const auto orbits = galois_orbits(g, all, DiagramAutomorphism::identity(3));
  EXPECT_EQ(orbits.size(), all.size());
  for (const auto& o : orbits) EXPECT_EQ(o.size(), 1u);
}

TEST(Orbits, HilbertSwap) {
  const auto g = group("A1xA1");
  const auto all = enumerate_group(g);
  const auto orbits = galois_orbits(g, all, perm(g, {1, 0}));
  ASSERT_EQ(orbits.size(), 3u);
  EXPECT_EQ(orbits[0], Orbit{g.identity()});
  EXPECT_EQ(orbits[1], (Orbit{word(g, {0}), word(g, {1})}));
  EXPECT_EQ(orbits[2], Orbit{word(g, {0, 1})});
}

TEST(Orbits, CyclicTripleSizes) {
  const auto g = group("A1xA1xA1");
  const auto orbits = galois_orbits(g, enumerate_group(g), perm(g, {1, 2, 0}));
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 3, 1}));
}

TEST(Orbits, UnstableSetRejected) {
  const auto g = group("A2");
  const std::vector<WeylElement> elems{g.identity(), word(g, {0})};
  EXPECT_THROW(galois_orbits(g, elems, perm(g, {1, 0})), ConsistencyError);
}

TEST(Orbits, PartitionAndPreserveLength) {
  std::mt19937 rng(29);
  const auto g = group("A5");
  const auto phi = perm(g, {4, 3, 2, 1, 0});
  for (int t = 0; t < 6; ++t) {
    auto J = test::random_subset(5, rng);
    // unions J u phi(J) and their opposites make phi-stable double coset sets
    std::vector<int> nodes = J.nodes();
    for (int j : J) nodes.push_back(phi(j));
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const TypeSubset S(nodes);
    const auto reps = min_double_reps(g, S, S);
    const auto orbits = galois_orbits(g, reps, phi);
    std::size_t total = 0;
    for (const auto& o : orbits) {
      total += o.size();
      EXPECT_LE(o.size(), 2u);
      for (const auto& y : o) EXPECT_EQ(y.length(), o.front().length());
    }
    EXPECT_EQ(total, reps.size());
  }
}

TEST(OrbitPoset, SingletonsRestrictBruhat) {
  const auto g = group("B2");
  const auto all = enumerate_group(g);
  BruhatOrder order(g);
  const auto poset = orbit_poset(g, galois_orbits(g, all, DiagramAutomorphism::identity(2)), order);
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b = 0; b < poset.size(); ++b)
      EXPECT_EQ(poset.leq(a, b), bruhat_leq(g, poset.representative(a), poset.representative(b)));
}

TEST(OrbitPoset, HilbertChain) {
  const auto g = group("A1xA1");
  BruhatOrder order(g);
  const auto poset = orbit_poset(g, galois_orbits(g, enumerate_group(g), perm(g, {1, 0})), order);
  ASSERT_EQ(poset.size(), 3u);
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(poset.hasse_edges(), (Edges{{0, 1}, {1, 2}}));
  EXPECT_EQ(poset.down_set(2), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(poset.down_set(0), (std::vector<std::size_t>{0}));
  EXPECT_EQ(poset.representative_word(1), (std::vector<int>{0}));
}

TEST(OrbitPoset, OnePoint) {
  const auto g = group("A2");
  BruhatOrder order(g);
  const auto poset = orbit_poset(g, {Orbit{g.identity()}}, order);
  EXPECT_EQ(poset.size(), 1u);
  EXPECT_TRUE(poset.hasse_edges().empty());
}

TEST(TransitiveReduction, ChainAndDiamond) {
  using Rel = std::vector<std::vector<bool>>;
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  const Rel chain{{true, true, true}, {false, true, true}, {false, false, true}};
  EXPECT_EQ(transitive_reduction(chain), (Edges{{0, 1}, {1, 2}}));
  const Rel diamond{{true, true, true, true}, {false, true, false, true}, {false, false, true, true},
                    {false, false, false, true}};
  EXPECT_EQ(transitive_reduction(diamond), (Edges{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

TEST(TransitiveReduction, BruhatCoversChangeLengthByOne) {
  const auto g = group("A3");
  BruhatOrder order(g);
  const auto poset = orbit_poset(g, galois_orbits(g, enumerate_group(g), perm(g, {2, 1, 0})), order);
  for (const auto& [lo, hi] : poset.hasse_edges()) {
    EXPECT_TRUE(poset.leq(lo, hi));
    EXPECT_EQ(poset.representative(hi).length(), poset.representative(lo).length() + 1);
  }
}
