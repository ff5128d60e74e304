#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "grouprep/group.hpp"
#include "grouprep/subgroups.hpp"

using namespace grouprep;

namespace {

Element at(const Group& g, const std::string& word) {
  auto e = g.find_label(word);
  EXPECT_TRUE(e.has_value()) << word;
  return e.value_or(0);
}

// Product of normal forms r^a s^j with s r s^-1 = r^z, s^2 = 1, r^n = 1,
// reduced by moving s past r^b: s r^b = r^(b z) s.
std::pair<std::int64_t, std::int64_t> rs_product(std::int64_t n, std::int64_t z, std::int64_t a, std::int64_t j,
                                                 std::int64_t b, std::int64_t l) {
  std::int64_t shift = b;
  if (j) shift = (b * z) % n;
  return {((a + shift) % n + n) % n, (j + l) % 2};
}

// Same for a^i x^j in DiC_m: x a^b = a^-b x, x^2 = a^m.
std::pair<std::int64_t, std::int64_t> dic_product(std::int64_t m, std::int64_t i, std::int64_t j, std::int64_t b,
                                                  std::int64_t l) {
  const auto n = 2 * m;
  std::int64_t e = i + (j ? -b : b);
  if (j && l) e += m;
  return {((e % n) + n) % n, (j + l) % 2};
}

void expect_rs_table(const Group& g, std::int64_t n, std::int64_t z) {
  ASSERT_EQ(g.order(), static_cast<std::size_t>(2 * n));
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t j = 0; j < 2; ++j)
      for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t l = 0; l < 2; ++l) {
          auto [c, k] = rs_product(n, z, a, j, b, l);
          ASSERT_EQ(g(static_cast<Element>(a + j * n), static_cast<Element>(b + l * n)), c + k * n)
              << "r^" << a << " s^" << j << " * r^" << b << " s^" << l;
        }
}

std::size_t count_order(const Group& g, std::size_t ord) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += g.element_order(x) == ord;
  return c;
}

}  // namespace

TEST(BuildGroup, DihedralThreeHasOrderSixAndReflectsRotation) {
  auto g = build_group(GroupSpec::dihedral(3));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g(at(g, "s"), at(g, "r")), g(at(g, "r^2"), at(g, "s")));
  EXPECT_TRUE(validate_group(g).ok());
}

TEST(BuildGroup, TrivialCyclic) {
  auto g = build_group(GroupSpec::cyclic(1));
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.table(), std::vector<Element>{0});
}

TEST(BuildGroup, QuaternionFromDicyclicTwo) {
  auto g = build_group(GroupSpec::dicyclic(2));
  ASSERT_EQ(g.order(), 8u);
  const auto x = at(g, "x");
  EXPECT_EQ(g(x, x), at(g, "a^2"));
  std::set<std::vector<Element>> cyclic;
  for (Element e = 0; e < g.order(); ++e) cyclic.insert(generated_subgroup(g, {e}).elements());
  // 1, <-1>, <i>, <j>, <k>; the sixth subgroup, Q8 itself, is not cyclic
  EXPECT_EQ(cyclic.size(), 5u);
  EXPECT_EQ(enumerate_subgroups(g).size(), 6u);
  EXPECT_EQ(count_order(g, 2), 1u);
}

TEST(BuildGroup, NormalFormOracleDihedral) {
  for (std::int64_t m : {3, 4, 5, 8, 12}) expect_rs_table(build_group(GroupSpec::dihedral(m)), m, m - 1);
}

TEST(BuildGroup, NormalFormOracleQuasidihedral) {
  for (std::int64_t k : {3, 4, 5}) {
    const auto n = std::int64_t{1} << k;
    expect_rs_table(build_group(GroupSpec::quasidihedral_minus(k)), n, n / 2 - 1);
    expect_rs_table(build_group(GroupSpec::quasidihedral_plus(k)), n, n / 2 + 1);
  }
}

TEST(BuildGroup, QuasidihedralPlusRsIsSR5) {
  auto g = build_group(GroupSpec::quasidihedral_plus(3));
  EXPECT_EQ(g.order(), 16u);
  EXPECT_EQ(g(at(g, "r"), at(g, "s")), g(at(g, "s"), at(g, "r^5")));
}

TEST(BuildGroup, NormalFormOracleDicyclic) {
  for (std::int64_t m : {2, 3, 4, 6}) {
    auto g = build_group(GroupSpec::dicyclic(m));
    const auto n = 2 * m;
    ASSERT_EQ(g.order(), static_cast<std::size_t>(4 * m));
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < 2; ++j)
        for (std::int64_t b = 0; b < n; ++b)
          for (std::int64_t l = 0; l < 2; ++l) {
            auto [c, k] = dic_product(m, i, j, b, l);
            ASSERT_EQ(g(static_cast<Element>(i + j * n), static_cast<Element>(b + l * n)), c + k * n);
          }
  }
}

TEST(BuildGroup, HeisenbergStructure) {
  for (std::int64_t p : {3, 5}) {
    auto g = build_group(GroupSpec::heisenberg_p3(p));
    ASSERT_EQ(g.order(), static_cast<std::size_t>(p * p * p));
    EXPECT_FALSE(g.is_abelian());
    // exponent p
    for (Element x = 1; x < g.order(); ++x) EXPECT_EQ(g.element_order(x), static_cast<std::size_t>(p));
    const auto r = at(g, "r"), s = at(g, "s"), t = at(g, "t");
    // [r, s] is t or its inverse, and central
    const auto comm = g(g(r, s), g(g.inverse(r), g.inverse(s)));
    EXPECT_TRUE(comm == t || comm == g.inverse(t));
    for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(g(t, x), g(x, t));
    EXPECT_EQ(center(g).size(), static_cast<std::size_t>(p));
  }
}

TEST(BuildGroup, ModularStructure) {
  for (std::int64_t p : {3, 5}) {
    auto g = build_group(GroupSpec::modular_p3(p));
    ASSERT_EQ(g.order(), static_cast<std::size_t>(p * p * p));
    const auto r = at(g, "r"), s = at(g, "s");
    EXPECT_EQ(g.element_order(r), static_cast<std::size_t>(p * p));
    EXPECT_EQ(g.element_order(s), static_cast<std::size_t>(p));
    EXPECT_EQ(g.conjugate(s, r), g.power(r, 1 + p));
    EXPECT_EQ(center(g).size(), static_cast<std::size_t>(p));
  }
}

TEST(BuildGroup, PTwoGivesD4AndQ8) {
  auto h = build_group(GroupSpec::heisenberg_p3(2));
  auto m = build_group(GroupSpec::modular_p3(2));
  EXPECT_EQ(count_order(h, 2), 5u);  // D_4
  EXPECT_EQ(count_order(m, 2), 1u);  // Q8
  EXPECT_EQ(h.table(), build_group(GroupSpec::dihedral(4)).table());
  EXPECT_EQ(m.table(), build_group(GroupSpec::dicyclic(2)).table());
}

TEST(BuildGroup, SymmetricGroupByClosure) {
  auto g = build_group(GroupSpec::permutation_closure({{1, 0, 2, 3}, {1, 2, 3, 0}}));
  EXPECT_EQ(g.order(), 24u);
  EXPECT_TRUE(validate_group(g).ok());
  EXPECT_EQ(center(g).size(), 1u);
}

TEST(BuildGroup, RejectsOutOfRangeParameters) {
  for (const auto& s : {GroupSpec::dihedral(2), GroupSpec::quasidihedral_minus(2), GroupSpec::quasidihedral_plus(1),
                        GroupSpec::dicyclic(1), GroupSpec::heisenberg_p3(4), GroupSpec::modular_p3(1),
                        GroupSpec::cyclic(0), GroupSpec::abelian_product({3, 0})}) {
    try {
      build_group(s);
      ADD_FAILURE() << describe(s);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter) << describe(s);
    }
  }
  EXPECT_THROW(build_group(GroupSpec::permutation_closure({{0, 0, 1}})), Error);
}

TEST(BuildGroup, OrderBound) {
  try {
    build_group(GroupSpec::dihedral(300));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderOverflow);
  }
  EXPECT_EQ(build_group(GroupSpec::dihedral(300), 600).order(), 600u);
}

TEST(ValidateGroup, PerturbedTableFails) {
  auto g = build_group(GroupSpec::dihedral(4));
  EXPECT_TRUE(validate_group(g).ok());
  auto table = g.table();
  // swap two entries in one row: rows stay permutations, columns do not
  std::swap(table[3 * 8 + 1], table[3 * 8 + 2]);
  Group bad(8, table);
  auto rep = validate_group(bad);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.failures.empty());
}

TEST(ValidateGroup, NonAssociativeLatinSquareFails) {
  // the loop of order 5 with a Latin square that is not a group table
  std::vector<Element> t{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  auto rep = validate_group(Group(5, t));
  EXPECT_TRUE(rep.identity);
  EXPECT_TRUE(rep.latin_square);
  EXPECT_FALSE(rep.associative);
}

TEST(ValidateGroup, AbelianProductTwoThreeIsCyclicSix) {
  auto g = build_group(GroupSpec::abelian_product({2, 3}));
  EXPECT_TRUE(validate_group(g).ok());
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(count_order(g, 6), 2u);
}

TEST(DirectProduct, CoprimeCyclic) {
  auto g = direct_product(build_group(GroupSpec::cyclic(2)), build_group(GroupSpec::cyclic(3)));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.element_order(1 * 3 + 1), 6u);
  EXPECT_TRUE(validate_group(g).ok());
}

TEST(DirectProduct, TrivialFactorKeepsTable) {
  auto d = build_group(GroupSpec::dihedral(5));
  auto g = direct_product(build_group(GroupSpec::cyclic(1)), d);
  EXPECT_EQ(g.table(), d.table());
}

TEST(DirectProduct, IndexingAndSpec) {
  auto a = build_group(GroupSpec::dihedral(4)), b = build_group(GroupSpec::cyclic(3));
  auto g = direct_product(a, b);
  EXPECT_EQ(g.order(), 24u);
  for (Element x = 0; x < 24; ++x)
    for (Element y = 0; y < 24; ++y)
      ASSERT_EQ(g(x, y), a(x / 3, y / 3) * 3 + b(x % 3, y % 3));
  ASSERT_TRUE(g.spec().has_value());
  EXPECT_EQ(g.spec()->family, Family::DirectProduct);
  EXPECT_EQ(build_group(*g.spec()).table(), g.table());
  EXPECT_TRUE(is_nilpotent(g));
  EXPECT_THROW(direct_product(a, b, 20), Error);
}

TEST(GroupInvariants, EveryFamilyValidates) {
  std::vector<GroupSpec> specs{
      GroupSpec::cyclic(9), GroupSpec::abelian_product({4, 2, 3}), GroupSpec::dihedral(7),
      GroupSpec::quasidihedral_minus(4), GroupSpec::quasidihedral_plus(4), GroupSpec::dicyclic(5),
      GroupSpec::heisenberg_p3(3), GroupSpec::modular_p3(3),
      GroupSpec::direct_product(GroupSpec::dihedral(3), GroupSpec::cyclic(4)),
      GroupSpec::permutation_closure({{1, 2, 0, 3}, {0, 2, 3, 1}})};
  for (const auto& s : specs) {
    auto g = build_group(s);
    EXPECT_TRUE(validate_group(g).ok()) << describe(s);
    EXPECT_EQ(build_group(s).table(), g.table()) << "determinism " << describe(s);
    EXPECT_EQ(g.labels().size(), g.order());
  }
}

TEST(GroupInvariants, ReflectionsHaveOrderTwo) {
  for (std::int64_t m : {3, 4, 6, 9}) {
    auto g = build_group(GroupSpec::dihedral(m));
    for (std::int64_t a = 0; a < m; ++a) {
      const auto x = static_cast<Element>(a + m);
      EXPECT_EQ(g(x, x), 0u);
    }
  }
}

TEST(GroupInvariants, DicyclicXSquaredAndOrder) {
  for (std::int64_t m : {2, 3, 5, 8}) {
    auto g = build_group(GroupSpec::dicyclic(m));
    const auto x = at(g, "x");
    EXPECT_EQ(g(x, x), static_cast<Element>(m));
    EXPECT_EQ(g.element_order(x), 4u);
  }
}

TEST(GroupInvariants, QuasidihedralConjugation) {
  for (std::int64_t k : {3, 4, 5}) {
    const auto half = std::int64_t{1} << (k - 1);
    auto gm = build_group(GroupSpec::quasidihedral_minus(k));
    auto gp = build_group(GroupSpec::quasidihedral_plus(k));
    auto srs = [](const Group& g) {
      const auto s = *g.find_label("s"), r = *g.find_label("r");
      return g(g(s, r), s);
    };
    EXPECT_EQ(srs(gm), gm.power(*gm.find_label("r"), half - 1));
    EXPECT_EQ(srs(gp), gp.power(*gp.find_label("r"), half + 1));
  }
}

TEST(GroupSpecNames, FamilyRoundTrip) {
  for (auto f : {Family::Cyclic, Family::AbelianProduct, Family::Dihedral, Family::QuasidihedralMinus,
                 Family::QuasidihedralPlus, Family::Dicyclic, Family::HeisenbergP3, Family::ModularP3,
                 Family::DirectProduct, Family::PermutationClosure})
    EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_FALSE(family_from_name("klein").has_value());
}
