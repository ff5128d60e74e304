#pragma once

// Subgroup-preserving bijections and the transfer of representations along
// them. A bijection that carries every subgroup to a subgroup also carries
// intersections to intersections, so any abelian tuple representing the
// image tuple represents the original one with the same index table.

#include <cstdint>
#include <string>
#include <vector>

#include "grouprep/certificate.hpp"
#include "grouprep/subgroups.hpp"

namespace grouprep {

/// Element pairing source -> target, as a table of target indices.
struct Bijection {
  Group source;
  Group target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map.at(x); }

  ElementSet image(const ElementSet& s) const {
    ElementSet out(target.order());
    s.for_each([&](Element x) { out.insert(map[x]); });
    return out;
  }
};

enum class BuiltinMap { Dihedral2k, QdMinus, QdPlus, Dicyclic2k };

inline const char* builtin_map_name(BuiltinMap f) {
  switch (f) {
    case BuiltinMap::Dihedral2k: return "dihedral2k";
    case BuiltinMap::QdMinus: return "qd_minus";
    case BuiltinMap::QdPlus: return "qd_plus";
    case BuiltinMap::Dicyclic2k: return "dicyclic2k";
  }
  return "?";
}

/// The explicit maps:
///   dihedral2k  D_{2^k} -> Z_2^{k+1}, r^a s^j -> sum_i a_i e_i + j e_k
///               (a_i the binary digits of a; e_0 is the first coordinate);
///   qd_minus/qd_plus  QD_{2^k} -> D_{2^k}, r^i s^j -> r^i s^j;
///   dicyclic2k  DiC_{2^{k-1}} -> D_{2^k}, a^i x^j -> r^i s^j.
inline Bijection builtin_bijection(BuiltinMap family, std::int64_t k, std::size_t max_order = kDefaultMaxOrder) {
  if (k < 2 || k > 20 || ((family == BuiltinMap::QdMinus || family == BuiltinMap::QdPlus) && k < 3))
    throw Error(ErrorKind::InvalidParameter, std::string(builtin_map_name(family)) + " needs a larger k");
  const auto n = std::int64_t{1} << k;
  auto dihedral = build_group(GroupSpec::dihedral(n), max_order);
  switch (family) {
    case BuiltinMap::Dihedral2k: {
      auto target = build_group(GroupSpec::abelian_product(std::vector<std::int64_t>(k + 1, 2)), max_order);
      std::vector<Element> map(dihedral.order());
      for (std::int64_t j = 0; j < 2; ++j)
        for (std::int64_t a = 0; a < n; ++a) {
          // coordinate t carries weight 2^(k - t) in the abelian_product index
          std::int64_t idx = j;
          for (std::int64_t bit = 0; bit < k; ++bit)
            if ((a >> bit) & 1) idx += std::int64_t{1} << (k - bit);
          map[a + j * n] = static_cast<Element>(idx);
        }
      return {std::move(dihedral), std::move(target), std::move(map)};
    }
    case BuiltinMap::QdMinus:
    case BuiltinMap::QdPlus:
    case BuiltinMap::Dicyclic2k: {
      auto source = family == BuiltinMap::QdMinus  ? build_group(GroupSpec::quasidihedral_minus(k), max_order)
                    : family == BuiltinMap::QdPlus ? build_group(GroupSpec::quasidihedral_plus(k), max_order)
                                                   : build_group(GroupSpec::dicyclic(n / 2), max_order);
      // both sides index r^i s^j (resp. a^i x^j) as i + j * 2^k
      std::vector<Element> map(source.order());
      for (Element x = 0; x < source.order(); ++x) map[x] = x;
      return {std::move(source), std::move(dihedral), std::move(map)};
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown builtin map");
}

struct PreservationReport {
  std::size_t subgroups_checked = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::vector<Element>> not_closed;
  std::size_t intersection_failures = 0;

  bool ok() const noexcept { return not_closed.empty() && intersection_failures == 0; }
};

inline bool is_bijection(const std::vector<Element>& map, std::size_t n) {
  if (map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

/// Checks psi(S) is a subgroup of `h` for every subgroup S of `g`, and
/// psi(S1 n S2) = psi(S1) n psi(S2) for every pair.
inline PreservationReport verify_subgroup_preserving(const std::vector<Element>& psi, const Group& g, const Group& h,
                                                     const LatticeLimits& limits = {}) {
  if (g.order() != h.order() || !is_bijection(psi, g.order()))
    throw Error(ErrorKind::InvalidParameter, "map is not a bijection between groups of equal order");
  auto image = [&](const ElementSet& s) {
    ElementSet out(h.order());
    s.for_each([&](Element x) { out.insert(psi[x]); });
    return out;
  };
  PreservationReport rep;
  auto lattice = enumerate_subgroups(g, limits);
  std::vector<ElementSet> images;
  for (const auto& s : lattice) {
    images.push_back(image(s.members()));
    ++rep.subgroups_checked;
    if (!is_subgroup(h, images.back())) rep.not_closed.push_back(s.elements());
  }
  for (std::size_t a = 0; a < lattice.size(); ++a)
    for (std::size_t b = a + 1; b < lattice.size(); ++b) {
      ++rep.pairs_checked;
      if (image(lattice[a].members() & lattice[b].members()) != (images[a] & images[b])) ++rep.intersection_failures;
    }
  return rep;
}

inline PreservationReport verify_subgroup_preserving(const Bijection& b, const LatticeLimits& limits = {}) {
  return verify_subgroup_preserving(b.map, b.source, b.target, limits);
}

/// Given a certificate for (H, psi(G_1), ..., psi(G_n)), returns the same
/// abelian side as a certificate for (G, G_1, ..., G_n).
inline RepresentationCertificate transfer_representation(const Bijection& psi, const SubgroupTuple& t,
                                                         const RepresentationCertificate& cert_for_target) {
  if (t.group().order() != psi.source.order())
    throw Error(ErrorKind::ParentMismatch, "tuple does not live in the bijection's source");
  if (cert_for_target.target_parts.size() != t.n())
    throw Error(ErrorKind::CertificateMismatch, "certificate arity differs from the tuple");
  for (std::size_t i = 0; i < t.n(); ++i) {
    if (psi.image(t[i].members()).elements() != cert_for_target.target_parts[i])
      throw Error(ErrorKind::CertificateMismatch,
                  "certificate part " + std::to_string(i + 1) + " is not the image of the tuple's part");
  }
  RepresentationCertificate out = cert_for_target;
  out.target = t.group().spec();
  out.target_parts.clear();
  for (const auto& h : t.parts()) out.target_parts.push_back(h.elements());
  return out;
}

/// Image of a tuple under psi, in the target group.
inline std::vector<Subgroup> image_parts(const Bijection& psi, const SubgroupTuple& t) {
  std::vector<Subgroup> out;
  for (const auto& h : t.parts()) out.emplace_back(psi.image(h.members()));
  return out;
}

}  // namespace grouprep
