#pragma once

// Uniform representation of the non-abelian groups of order p^3 for n = 3
// inside A = C_{p^2} x C_p = <g> x <r>. Every triple of distinct proper
// non-trivial subgroups has one of eight index profiles; each profile comes
// with explicit generators for A_1, A_2, A_3.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouprep/representability.hpp"

namespace grouprep {

/// One generator g^e r^f of A, with the g-exponent given symbolically.
struct P3Generator {
  enum class GPower { None, One, P } g = GPower::None;
  bool r = false;
};

struct P3Case {
  int id = 0;
  /// Exponents of (i_1, i_2, i_3, i_12, i_13, i_23, i_123) as powers of p.
  std::array<int, 7> exponents{};
  std::array<std::vector<P3Generator>, 3> generators;
};

inline const std::array<P3Case, 8>& p3_case_table() {
  using G = P3Generator::GPower;
  const P3Generator gp{G::P, false}, g{G::One, false}, r{G::None, true}, gr{G::One, true}, gpr{G::P, true};
  static const std::array<P3Case, 8> table{{
      {1, {1, 1, 1, 2, 2, 2, 2}, {{{gp, r}, {g}, {gr}}}},
      {2, {1, 1, 2, 2, 2, 2, 2}, {{{gp, r}, {g}, {gp}}}},
      {3, {1, 1, 2, 2, 2, 3, 3}, {{{gp, r}, {g}, {r}}}},
      {4, {1, 1, 2, 2, 3, 3, 3}, {{{gr}, {g}, {r}}}},
      {5, {1, 2, 2, 2, 2, 3, 3}, {{{gp, r}, {gp}, {r}}}},
      {6, {1, 2, 2, 2, 3, 3, 3}, {{{g}, {gp}, {gpr}}}},
      {7, {1, 2, 2, 3, 3, 3, 3}, {{{gr}, {gpr}, {r}}}},
      {8, {2, 2, 2, 3, 3, 3, 3}, {{{gp}, {r}, {gpr}}}},
  }};
  return table;
}

/// Masks in profile order: 1, 2, 3, 12, 13, 23, 123.
inline constexpr std::array<Mask, 7> kP3ProfileMasks{1, 2, 4, 3, 5, 6, 7};

/// A = C_{p^2} x C_p with g = (1, 0) at index p and r = (0, 1) at index 1.
inline AbelianSpec p3_abelian_spec(std::int64_t p) { return AbelianSpec{{p * p, p}}; }

inline Element p3_element(std::int64_t p, const P3Generator& gen) {
  std::int64_t ge = gen.g == P3Generator::GPower::None ? 0 : gen.g == P3Generator::GPower::One ? 1 : p;
  return static_cast<Element>(ge * p + (gen.r ? 1 : 0));
}

/// A_1, A_2, A_3 of a tabulated case, instantiated at a prime p.
inline std::vector<Subgroup> instantiate_p3_case(const P3Case& c, std::int64_t p, const Group& a) {
  std::vector<Subgroup> out;
  for (const auto& gens : c.generators) {
    std::vector<Element> elems;
    for (const auto& gen : gens) elems.push_back(p3_element(p, gen));
    out.push_back(generated_subgroup(a, elems));
  }
  return out;
}

struct P3Outcome {
  RepresentationCertificate certificate;
  std::optional<int> case_id;
  /// perm[l] = which original part plays the role of the case's part l.
  std::array<std::size_t, 3> perm{0, 1, 2};
  /// Set when the profile was not in the table (or parts repeat) and the
  /// certificate came from the exhaustive search instead.
  bool profile_not_in_table = false;
  std::string note;
};

/// Index-exponent profile of a triple in a group of order p^3.
inline std::array<int, 7> p3_profile(const SubgroupTuple& t, std::int64_t p) {
  auto v = entropic_vector(t);
  std::array<int, 7> out{};
  for (std::size_t i = 0; i < 7; ++i)
    out[i] = static_cast<int>(detail::log_p(v.at(kP3ProfileMasks[i]), static_cast<std::uint64_t>(p)));
  return out;
}

inline P3Outcome p3_uniform_representation(const SubgroupTuple& t, RepresentationSearcher* fallback = nullptr) {
  const auto& g = t.group();
  const auto primes = prime_divisors(g.order());
  if (primes.size() != 1 || g.order() != primes[0] * primes[0] * primes[0] || g.is_abelian())
    throw Error(ErrorKind::InvalidParameter, "expected a non-abelian group of order p^3");
  if (t.n() != 3) throw Error(ErrorKind::ArityMismatch, "the p^3 table covers n = 3");
  for (const auto& h : t.parts())
    if (h.is_trivial() || h.is_whole())
      throw Error(ErrorKind::InvalidParameter, "the p^3 table covers proper non-trivial subgroups");
  const auto p = static_cast<std::int64_t>(primes[0]);

  P3Outcome out;
  const bool distinct = t[0] != t[1] && t[0] != t[2] && t[1] != t[2];
  if (distinct) {
    auto a = build_group(p3_abelian_spec(p).group_spec());
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      SubgroupTuple permuted(g, {t[perm[0]], t[perm[1]], t[perm[2]]});
      const auto profile = p3_profile(permuted, p);
      for (const auto& c : p3_case_table()) {
        if (c.exponents != profile) continue;
        auto parts = instantiate_p3_case(c, p, a);
        RepresentationCertificate cert;
        cert.abelian = p3_abelian_spec(p);
        cert.parts.resize(3);
        std::vector<ElementSet> sets(3);
        for (std::size_t l = 0; l < 3; ++l) {
          cert.parts[perm[l]] = parts[l].elements();
          sets[perm[l]] = parts[l].members();
        }
        cert.index_table = index_table_of(a, sets);
        if (cert.index_table != entropic_vector(t).indices) continue;
        out.certificate = retarget(std::move(cert), t);
        out.case_id = c.id;
        out.perm = perm;
        return out;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.note = "profile not in table";
  } else {
    out.note = "repeated subgroup";
  }

  out.profile_not_in_table = true;
  RepresentationSearcher local;
  auto& searcher = fallback ? *fallback : local;
  auto found = searcher.find(t, {1});
  if (!found.certificate)
    throw Error(ErrorKind::ProfileNotInTable, g.name() + ": " + out.note + " and no abelian group of order " +
                                                  std::to_string(g.order()) + " matches");
  out.certificate = std::move(*found.certificate);
  return out;
}

}  // namespace grouprep
