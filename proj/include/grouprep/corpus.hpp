#pragma once

// Fixed group corpora for the reproduction suite. Each list is deterministic
// and ordered by family, then by order.

#include <string>
#include <vector>

#include "grouprep/group.hpp"

namespace grouprep::corpus {

inline GroupSpec s4() { return GroupSpec::permutation_closure({{1, 0, 2, 3}, {1, 2, 3, 0}}); }
inline GroupSpec a4() { return GroupSpec::permutation_closure({{1, 2, 0, 3}, {0, 2, 3, 1}}); }

/// Groups of order <= 48 covering every family, nilpotent and not.
inline std::vector<GroupSpec> classification() {
  using S = GroupSpec;
  return {
      S::cyclic(2),
      S::cyclic(6),
      S::cyclic(8),
      S::cyclic(12),
      S::cyclic(30),
      S::abelian_product({2, 2}),
      S::abelian_product({4, 2}),
      S::abelian_product({2, 2, 2}),
      S::abelian_product({3, 3}),
      S::abelian_product({6, 2}),
      S::abelian_product({4, 4}),
      S::abelian_product({2, 2, 2, 2}),
      S::abelian_product({3, 3, 3}),
      S::dihedral(3),
      S::dihedral(4),
      S::dihedral(5),
      S::dihedral(6),
      S::dihedral(8),
      S::dihedral(10),
      S::dihedral(12),
      S::dihedral(16),
      S::dihedral(24),
      S::quasidihedral_minus(3),
      S::quasidihedral_plus(3),
      S::quasidihedral_minus(4),
      S::quasidihedral_plus(4),
      S::dicyclic(2),
      S::dicyclic(3),
      S::dicyclic(4),
      S::dicyclic(5),
      S::dicyclic(6),
      S::dicyclic(8),
      S::heisenberg_p3(3),
      S::modular_p3(3),
      S::direct_product(S::dihedral(4), S::cyclic(3)),
      S::direct_product(S::dicyclic(2), S::cyclic(3)),
      S::direct_product(S::dihedral(4), S::cyclic(5)),
      S::direct_product(S::dihedral(3), S::cyclic(5)),
      S::direct_product(S::dihedral(3), S::cyclic(7)),
      a4(),
      s4(),
  };
}

/// Groups of order <= 64 for the coset-distribution oracle.
inline std::vector<GroupSpec> theorem() {
  using S = GroupSpec;
  return {
      S::cyclic(1),
      S::cyclic(7),
      S::cyclic(64),
      S::abelian_product({4, 2}),
      S::abelian_product({6, 2}),
      S::abelian_product({4, 4, 2}),
      S::abelian_product({8, 8}),
      S::dihedral(3),
      S::dihedral(8),
      S::dihedral(15),
      S::dihedral(32),
      S::quasidihedral_minus(3),
      S::quasidihedral_plus(4),
      S::quasidihedral_minus(5),
      S::quasidihedral_plus(5),
      S::dicyclic(2),
      S::dicyclic(3),
      S::dicyclic(8),
      S::dicyclic(16),
      S::heisenberg_p3(2),
      S::modular_p3(2),
      S::heisenberg_p3(3),
      S::modular_p3(3),
      S::direct_product(S::dihedral(4), S::cyclic(3)),
      S::direct_product(S::dihedral(3), S::dihedral(3)),
      S::direct_product(S::dicyclic(2), S::cyclic(7)),
      a4(),
      s4(),
  };
}

/// p-groups of order <= 81.
inline std::vector<GroupSpec> pgroups() {
  using S = GroupSpec;
  return {
      S::cyclic(8),
      S::cyclic(81),
      S::abelian_product({4, 2}),
      S::abelian_product({2, 2, 2, 2}),
      S::abelian_product({9, 3}),
      S::abelian_product({9, 9}),
      S::abelian_product({3, 3, 3, 3}),
      S::dihedral(4),
      S::dihedral(8),
      S::dihedral(16),
      S::quasidihedral_minus(3),
      S::quasidihedral_plus(3),
      S::quasidihedral_minus(4),
      S::quasidihedral_plus(4),
      S::dicyclic(2),
      S::dicyclic(4),
      S::dicyclic(8),
      S::heisenberg_p3(3),
      S::modular_p3(3),
      S::direct_product(S::heisenberg_p3(3), S::cyclic(3)),
      S::direct_product(S::modular_p3(3), S::cyclic(3)),
      S::direct_product(S::dihedral(4), S::cyclic(2)),
  };
}

}  // namespace grouprep::corpus
