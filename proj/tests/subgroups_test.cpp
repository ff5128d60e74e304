#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "grouprep/closed_forms.hpp"
#include "grouprep/corpus.hpp"
#include "grouprep/group.hpp"
#include "grouprep/subgroups.hpp"

using namespace grouprep;

namespace {

// Every subset containing 1 that is closed under the table, by brute force.
std::set<std::vector<Element>> closed_subsets(const Group& g) {
  const auto n = g.order();
  std::set<std::vector<Element>> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); bits += 2) {
    std::vector<Element> s;
    for (Element x = 0; x < n; ++x)
      if (bits >> x & 1) s.push_back(x);
    bool closed = true;
    for (auto a : s) {
      for (auto b : s)
        if (!(bits >> g(a, b) & 1)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

std::set<std::vector<Element>> as_set(const std::vector<Subgroup>& l) {
  std::set<std::vector<Element>> out;
  for (const auto& h : l) out.insert(h.elements());
  return out;
}

Element at(const Group& g, const std::string& w) { return g.find_label(w).value(); }

std::int64_t v2(std::int64_t x) {
  std::int64_t e = 0;
  while (x % 2 == 0) x /= 2, ++e;
  return e;
}

}  // namespace

TEST(EnumerateSubgroups, MatchesBruteForceClosure) {
  for (const auto& s : {GroupSpec::dicyclic(2), GroupSpec::dihedral(3), GroupSpec::dihedral(4),
                        GroupSpec::abelian_product({2, 2, 2}), GroupSpec::cyclic(12), GroupSpec::dicyclic(3)}) {
    auto g = build_group(s);
    auto lattice = enumerate_subgroups(g);
    EXPECT_EQ(as_set(lattice), closed_subsets(g)) << describe(s);
    EXPECT_EQ(as_set(lattice).size(), lattice.size()) << "duplicates in " << describe(s);
  }
}

TEST(EnumerateSubgroups, KnownCounts) {
  EXPECT_EQ(enumerate_subgroups(build_group(GroupSpec::dihedral(3))).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(build_group(GroupSpec::dihedral(4))).size(), 10u);
  EXPECT_EQ(enumerate_subgroups(build_group(GroupSpec::dicyclic(2))).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(build_group(GroupSpec::abelian_product({2, 2, 2}))).size(), 16u);
  EXPECT_EQ(enumerate_subgroups(build_group(corpus::s4())).size(), 30u);
}

TEST(EnumerateSubgroups, CyclicHasOneSubgroupPerDivisor) {
  for (std::int64_t m : {1, 2, 7, 12, 30, 64}) {
    std::size_t divisors = 0;
    for (std::int64_t d = 1; d <= m; ++d) divisors += m % d == 0;
    EXPECT_EQ(enumerate_subgroups(build_group(GroupSpec::cyclic(m))).size(), divisors) << m;
  }
}

TEST(EnumerateSubgroups, CanonicalOrderAndEnds) {
  auto g = build_group(GroupSpec::dihedral(6));
  auto l = enumerate_subgroups(g);
  EXPECT_TRUE(l.front().is_trivial());
  EXPECT_TRUE(l.back().is_whole());
  EXPECT_TRUE(std::is_sorted(l.begin(), l.end(), canonical_less));
  EXPECT_EQ(enumerate_subgroups(g), l);
}

TEST(EnumerateSubgroups, LatticeClosedUnderIntersection) {
  for (const auto& s : {GroupSpec::dihedral(6), GroupSpec::quasidihedral_plus(4), GroupSpec::heisenberg_p3(3)}) {
    auto g = build_group(s);
    auto l = enumerate_subgroups(g);
    auto set = as_set(l);
    for (const auto& a : l)
      for (const auto& b : l) ASSERT_TRUE(set.count(intersect(a, b).elements())) << describe(s);
  }
}

TEST(EnumerateSubgroups, ProductSetSizeFormula) {
  auto g = build_group(GroupSpec::dihedral(6));
  auto l = enumerate_subgroups(g);
  for (const auto& h : l)
    for (const auto& k : l) ASSERT_EQ(product_set(g, h, k).size() * intersect(h, k).size(), h.size() * k.size());
}

TEST(EnumerateSubgroups, BoundExceeded) {
  auto g = build_group(GroupSpec::cyclic(30));
  try {
    enumerate_subgroups(g, LatticeLimits{16, 250000});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(GeneratedSubgroup, Examples) {
  auto g = build_group(GroupSpec::dihedral(4));
  EXPECT_EQ(generated_subgroup(g, {at(g, "r")}).size(), 4u);
  EXPECT_EQ(generated_subgroup(g, {at(g, "s")}).size(), 2u);
  EXPECT_EQ(generated_subgroup(g, {at(g, "r^2"), at(g, "s")}).size(), 4u);
  EXPECT_TRUE(generated_subgroup(g, {at(g, "r"), at(g, "s")}).is_whole());
  EXPECT_TRUE(generated_subgroup(g, {}).is_trivial());
}

TEST(SubgroupOps, IndexNormalConjugate) {
  auto g = build_group(GroupSpec::dihedral(3));
  auto rot = generated_subgroup(g, {at(g, "r")});
  auto refl = generated_subgroup(g, {at(g, "s")});
  EXPECT_EQ(index(g, rot), 2u);
  EXPECT_EQ(index(g, refl), 3u);
  EXPECT_TRUE(is_normal(g, rot));
  EXPECT_FALSE(is_normal(g, refl));
  auto c = conjugate_subgroup(g, refl, at(g, "r"));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_NE(c, refl);
  EXPECT_TRUE(intersect(c, refl).is_trivial());
}

TEST(SubgroupOps, Center) {
  EXPECT_EQ(center(build_group(GroupSpec::dihedral(3))).size(), 1u);
  EXPECT_EQ(center(build_group(GroupSpec::dihedral(4))).size(), 2u);
  EXPECT_EQ(center(build_group(GroupSpec::dicyclic(2))).size(), 2u);
  EXPECT_EQ(center(build_group(GroupSpec::cyclic(9))).size(), 9u);
}

TEST(Sylow, Examples) {
  auto s4 = build_group(corpus::s4());
  EXPECT_EQ(sylow_subgroup(s4, 2).size(), 8u);
  EXPECT_EQ(sylow_subgroup(s4, 3).size(), 3u);
  auto d6 = build_group(GroupSpec::dihedral(6));
  EXPECT_EQ(sylow_subgroup(d6, 3).size(), 3u);
  EXPECT_TRUE(is_normal(d6, sylow_subgroup(d6, 3)));
  try {
    sylow_subgroup(d6, 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrimeDoesNotDivideOrder);
  }
}

TEST(Nilpotency, Examples) {
  EXPECT_TRUE(is_nilpotent(build_group(GroupSpec::cyclic(1))));
  EXPECT_TRUE(is_nilpotent(build_group(GroupSpec::dihedral(8))));
  EXPECT_TRUE(is_nilpotent(build_group(GroupSpec::cyclic(30))));
  EXPECT_TRUE(is_nilpotent(build_group(GroupSpec::heisenberg_p3(3))));
  EXPECT_FALSE(is_nilpotent(build_group(GroupSpec::dihedral(3))));
  EXPECT_FALSE(is_nilpotent(build_group(GroupSpec::dihedral(6))));
  EXPECT_FALSE(is_nilpotent(build_group(GroupSpec::dicyclic(3))));
  EXPECT_FALSE(is_nilpotent(build_group(corpus::s4())));
}

TEST(Nilpotency, CoprimeProductOfNilpotentIsNilpotent) {
  auto g = build_group(GroupSpec::direct_product(GroupSpec::dicyclic(2), GroupSpec::heisenberg_p3(3)));
  EXPECT_EQ(g.order(), 216u);
  EXPECT_TRUE(is_nilpotent(g));
}

TEST(Nilpotency, WitnessForD3) {
  auto g = build_group(GroupSpec::dihedral(3));
  auto w = non_nilpotent_witness(g);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->prime, 2u);
  EXPECT_EQ(w->sylow.size(), 2u);
  EXPECT_NE(w->sylow, w->conjugate);
  EXPECT_EQ(conjugate_subgroup(g, w->sylow, w->conjugator), w->conjugate);
  EXPECT_TRUE(w->intersection.is_trivial());
  EXPECT_FALSE(non_nilpotent_witness(build_group(GroupSpec::dihedral(4))).has_value());
}

TEST(SubgroupTuple, RejectsImproperUnlessAllowed) {
  auto g = build_group(GroupSpec::dihedral(3));
  auto triv = Subgroup::trivial(6);
  EXPECT_THROW(SubgroupTuple(g, {triv}), Error);
  EXPECT_NO_THROW(SubgroupTuple(g, {triv}, true));
  ElementSet bad(6);
  bad.insert(0);
  bad.insert(1);
  EXPECT_THROW(SubgroupTuple(g, {Subgroup(bad)}, true), Error);
}

TEST(ClosedForms, EqualLatticeForDihedralQdMinusDicyclic) {
  for (std::int64_t k : {2, 3, 4, 5}) {
    auto d = build_group(GroupSpec::dihedral(std::int64_t{1} << k));
    EXPECT_EQ(closed_form_subgroups(TwoGroupFamily::Dihedral, k), as_set(enumerate_subgroups(d))) << k;
    auto q = build_group(GroupSpec::dicyclic(std::int64_t{1} << (k - 1)));
    EXPECT_EQ(closed_form_subgroups(TwoGroupFamily::Dicyclic, k), as_set(enumerate_subgroups(q))) << k;
    if (k >= 3) {
      auto m = build_group(GroupSpec::quasidihedral_minus(k));
      EXPECT_EQ(closed_form_subgroups(TwoGroupFamily::QdMinus, k), as_set(enumerate_subgroups(m))) << k;
    }
  }
}

// In QD+ the coset-set forms {r^a, r^b s : 2^i | a, b = j mod 2^i} are
// subgroups exactly when (r^j s)^2 = r^(2j(2^(k-2)+1)) lands in <r^(2^i)>,
// i.e. when v2(j) + 1 >= i; the lattice is what remains.
TEST(ClosedForms, QdPlusLatticeIsFormsMinusNonClosedCosets) {
  for (std::int64_t k : {3, 4, 5}) {
    auto g = build_group(GroupSpec::quasidihedral_plus(k));
    auto lattice = as_set(enumerate_subgroups(g));
    auto forms = closed_form_subgroups(TwoGroupFamily::QdPlus, k);
    EXPECT_TRUE(std::includes(forms.begin(), forms.end(), lattice.begin(), lattice.end())) << k;
    std::set<std::vector<Element>> predicted;
    for (const auto& f : closed_forms(TwoGroupFamily::QdPlus, k))
      if (f.type == 2 && f.j > 0 && v2(f.j) + 1 < f.i) predicted.insert(f.members);
    std::set<std::vector<Element>> extras;
    std::set_difference(forms.begin(), forms.end(), lattice.begin(), lattice.end(),
                        std::inserter(extras, extras.end()));
    EXPECT_EQ(extras, predicted) << k;
    for (const auto& e : extras) EXPECT_FALSE(is_subgroup(g, ElementSet::from(g.order(), e)));
  }
}

TEST(ClosedForms, QdPlusOrderSixteenNonClosedPairs) {
  std::set<std::pair<std::int64_t, std::int64_t>> bad;
  auto g = build_group(GroupSpec::quasidihedral_plus(4));
  for (const auto& f : closed_forms(TwoGroupFamily::QdPlus, 4))
    if (f.type == 2 && !is_subgroup(g, ElementSet::from(g.order(), f.members))) bad.insert({f.i, f.j});
  std::set<std::pair<std::int64_t, std::int64_t>> want{{2, 1}, {2, 3}, {3, 1}, {3, 2},
                                                        {3, 3}, {3, 5}, {3, 6}, {3, 7}};
  EXPECT_EQ(bad, want);
}
