#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "grouprep/entropic.hpp"
#include "grouprep/group.hpp"

using namespace grouprep;

namespace {

Subgroup gen(const Group& g, std::initializer_list<const char*> words) {
  std::vector<Element> e;
  for (auto w : words) e.push_back(g.find_label(w).value());
  return generated_subgroup(g, e);
}

// Number of distinct tuples (x G_i)_{i in A} over x in G, with each coset
// written out as a full member set.
std::uint64_t coset_tuple_count(const SubgroupTuple& t, Mask m) {
  const auto& g = t.group();
  std::set<std::vector<std::set<Element>>> seen;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<std::set<Element>> tuple;
    for (std::size_t i = 0; i < t.n(); ++i) {
      if (!(m >> i & 1)) continue;
      std::set<Element> coset;
      for (auto h : t[i].elements()) coset.insert(g(x, h));
      tuple.push_back(std::move(coset));
    }
    seen.insert(std::move(tuple));
  }
  return seen.size();
}

std::vector<SubgroupTuple> random_tuples(const Group& g, const std::vector<Subgroup>& lattice, std::size_t n,
                                         std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SubgroupTuple> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Subgroup> parts;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(lattice[rng() % lattice.size()]);
    out.emplace_back(g, parts, true);
  }
  return out;
}

}  // namespace

TEST(EntropicVector, QuaternionPair) {
  auto g = build_group(GroupSpec::dicyclic(2));
  SubgroupTuple t(g, {gen(g, {"a"}), gen(g, {"x"})});
  auto v = entropic_vector(t);
  EXPECT_EQ(v.indices, (std::map<Mask, std::uint64_t>{{1, 2}, {2, 2}, {3, 4}}));
  EXPECT_DOUBLE_EQ(v.entropy(3), 2.0);
}

TEST(EntropicVector, DihedralReflectionPair) {
  auto g = build_group(GroupSpec::dihedral(3));
  SubgroupTuple t(g, {gen(g, {"s"}), gen(g, {"r s"})});
  auto v = entropic_vector(t);
  EXPECT_EQ(v.indices, (std::map<Mask, std::uint64_t>{{1, 3}, {2, 3}, {3, 6}}));
  EXPECT_NEAR(v.entropy(1), std::log2(3.0), 1e-12);
}

TEST(EntropicVector, MatchesCosetTupleCount) {
  for (const auto& s : {GroupSpec::dihedral(6), GroupSpec::quasidihedral_plus(4), GroupSpec::dicyclic(3),
                        GroupSpec::heisenberg_p3(3), GroupSpec::abelian_product({4, 2})}) {
    auto g = build_group(s);
    auto lattice = enumerate_subgroups(g);
    for (const auto& t : random_tuples(g, lattice, 3, 25, 7)) {
      auto v = entropic_vector(t);
      for (Mask m = 1; m <= 7; ++m) ASSERT_EQ(v.at(m), coset_tuple_count(t, m)) << describe(s) << " mask " << m;
    }
  }
}

TEST(EntropicVector, PolymatroidPropertiesHold) {
  for (const auto& s : {GroupSpec::dihedral(5), GroupSpec::modular_p3(3), GroupSpec::quasidihedral_minus(4)}) {
    auto g = build_group(s);
    auto lattice = enumerate_subgroups(g);
    for (const auto& t : random_tuples(g, lattice, 4, 40, 11)) EXPECT_TRUE(vector_invariant_violations(entropic_vector(t)).empty());
  }
}

TEST(EntropicVector, BrokenVectorIsFlagged) {
  EntropicVector v;
  v.n = 2;
  v.indices = {{1, 4}, {2, 3}, {3, 6}};  // 4 does not divide 6
  EXPECT_FALSE(vector_invariant_violations(v).empty());
  v.indices = {{1, 2}, {2, 2}, {3, 8}};  // exceeds the product
  EXPECT_FALSE(vector_invariant_violations(v).empty());
}

TEST(EntropicVector, TrivialPartDeterminesEverything) {
  auto g = build_group(GroupSpec::dihedral(4));
  auto lattice = enumerate_subgroups(g);
  for (const auto& h : lattice) {
    SubgroupTuple t(g, {Subgroup::trivial(g.order()), h}, true);
    auto v = entropic_vector(t);
    EXPECT_EQ(v.at(1), g.order());
    EXPECT_EQ(v.at(3), v.at(1));
  }
}

TEST(EntropicVector, BaseChangesOnlyEntropies) {
  auto g = build_group(GroupSpec::cyclic(9));
  SubgroupTuple t(g, {generated_subgroup(g, {3})});
  auto v = entropic_vector(t);
  v.log_base = 3.0;
  EXPECT_NEAR(v.entropy(1), 1.0, 1e-12);
}

TEST(EntropicVector, InvariantUnderRelabellingAutomorphism) {
  // inversion is an automorphism of an abelian group
  auto g = build_group(GroupSpec::abelian_product({4, 2}));
  auto lattice = enumerate_subgroups(g);
  for (const auto& t : random_tuples(g, lattice, 3, 20, 3)) {
    std::vector<Subgroup> img;
    for (const auto& h : t.parts()) {
      std::vector<Element> e;
      for (auto x : h.elements()) e.push_back(g.inverse(x));
      img.emplace_back(ElementSet::from(g.order(), e));
    }
    EXPECT_EQ(entropic_vector(t), entropic_vector(SubgroupTuple(g, img, true)));
  }
}

TEST(Theorem, CosetDistributionEntropyMatches) {
  for (const auto& s : {GroupSpec::dihedral(4), GroupSpec::dicyclic(3), GroupSpec::cyclic(12)}) {
    auto g = build_group(s);
    auto lattice = enumerate_subgroups(g);
    for (const auto& t : random_tuples(g, lattice, 3, 30, 5)) {
      auto rep = verify_theorem(t);
      EXPECT_TRUE(rep.ok) << describe(s);
      EXPECT_TRUE(rep.quasi_uniform);
      EXPECT_EQ(rep.masks_checked, 7u);
      EXPECT_LT(rep.max_deviation, 1e-9);
    }
  }
}

TEST(Theorem, JointDistributionHasFullMass) {
  auto g = build_group(GroupSpec::dihedral(3));
  SubgroupTuple t(g, {gen(g, {"s"}), gen(g, {"r"})});
  auto d = joint_coset_distribution(t);
  EXPECT_EQ(d.denominator, 6u);
  std::uint64_t total = 0;
  for (const auto& [atom, mass] : d.support) total += mass;
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(d.support.size(), 6u);
  EXPECT_EQ(d.marginal(2).size(), 2u);
}

TEST(EntropicVector, ArityLimit) {
  auto g = build_group(GroupSpec::cyclic(2));
  std::vector<Subgroup> parts(17, Subgroup::whole(2));
  EXPECT_THROW(entropic_vector(SubgroupTuple(g, parts, true)), Error);
}
