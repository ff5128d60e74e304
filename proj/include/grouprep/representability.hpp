#pragma once

// Abelian representability: the index divisibility obstruction, the n = 2
// inequality for p-groups and its elementary abelian construction, a bounded
// exhaustive search for representing abelian tuples, and the n = 2
// classification (representable iff nilpotent).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "grouprep/abelian.hpp"
#include "grouprep/certificate.hpp"
#include "grouprep/entropic.hpp"
#include "grouprep/subgroups.hpp"

namespace grouprep {

/// Checks i_{12} | i_1 i_2 on every pair of singletons, and with
/// `disjoint_masks` on every pair of disjoint nonempty masks. Returns the
/// first violation found, or nothing when the tuple passes.
inline std::optional<NonRepresentabilityWitness> necessary_divisibility(const SubgroupTuple& t,
                                                                        bool disjoint_masks = false) {
  if (t.n() < 2) throw Error(ErrorKind::InvalidParameter, "divisibility needs at least two subgroups");
  auto v = entropic_vector(t);
  const auto top = full_mask(t.n());
  auto witness = [&](Mask a, Mask b) -> std::optional<NonRepresentabilityWitness> {
    const auto ia = v.at(a), ib = v.at(b), iab = v.at(a | b);
    if ((ia * ib) % iab == 0) return std::nullopt;
    return NonRepresentabilityWitness{t.group().spec(), t.intersection(a).elements(), t.intersection(b).elements(),
                                      ia, ib, iab};
  };
  for (std::size_t i = 0; i < t.n(); ++i)
    for (std::size_t j = i + 1; j < t.n(); ++j)
      if (auto w = witness(1U << i, 1U << j)) return w;
  if (disjoint_masks) {
    for (Mask a = 1; a <= top; ++a)
      for (Mask b = a + 1; b <= top; ++b)
        if ((a & b) == 0)
          if (auto w = witness(a, b)) return w;
  }
  return std::nullopt;
}

/// For subgroups of orders p^i, p^j with intersection of order p^k in a
/// group of order p^m: i + j - k <= m.
inline bool n2_inequality(std::int64_t i, std::int64_t j, std::int64_t k, std::int64_t m) {
  if (k < 0 || k > std::min(i, j) || std::max(i, j) > m)
    throw Error(ErrorKind::DomainError, "exponents must satisfy 0 <= k <= min(i,j) <= max(i,j) <= m");
  return i + j - k <= m;
}

/// A = C_p^m split into coordinate blocks of sizes k, i-k, j-k and the rest;
/// A_1 spans the first two blocks, A_2 the first and third.
inline RepresentationCertificate n2_elementary_construction(std::int64_t p, std::int64_t i, std::int64_t j,
                                                            std::int64_t k, std::int64_t m,
                                                            std::size_t max_order = kDefaultMaxOrder) {
  if (!detail::is_prime(p)) throw Error(ErrorKind::DomainError, "p must be prime");
  if (!n2_inequality(i, j, k, m)) throw Error(ErrorKind::DomainError, "i + j - k exceeds m");
  RepresentationCertificate c;
  c.abelian.factors.assign(static_cast<std::size_t>(m), p);
  auto a = build_group(c.abelian.group_spec(), max_order);
  // coordinate t of element x (coordinate 0 most significant)
  auto in_blocks = [&](Element x, bool second_block, bool third_block) {
    auto v = static_cast<std::int64_t>(x);
    for (auto t = m - 1; t >= 0; --t, v /= p) {
      if (v % p == 0) continue;
      if (t < k) continue;
      if (t < i) {
        if (!second_block) return false;
      } else if (t < i + j - k) {
        if (!third_block) return false;
      } else {
        return false;
      }
    }
    return true;
  };
  std::vector<Element> a1, a2;
  for (Element x = 0; x < a.order(); ++x) {
    if (in_blocks(x, true, false)) a1.push_back(x);
    if (in_blocks(x, false, true)) a2.push_back(x);
  }
  c.parts = {a1, a2};
  c.index_table = index_table_of(a, {ElementSet::from(a.order(), a1), ElementSet::from(a.order(), a2)});
  return c;
}

/// Certificate for a tuple of an abelian group whose spec is already an
/// abelian product (or cyclic): A = G, A_i = G_i.
inline std::optional<RepresentationCertificate> self_certificate(const SubgroupTuple& t) {
  const auto& spec = t.group().spec();
  if (!spec) return std::nullopt;
  RepresentationCertificate c;
  if (spec->family == Family::Cyclic)
    c.abelian.factors = {spec->m};
  else if (spec->family == Family::AbelianProduct)
    c.abelian.factors = spec->factors;
  else
    return std::nullopt;
  for (const auto& h : t.parts()) c.parts.push_back(h.elements());
  c.index_table = entropic_vector(t).indices;
  return retarget(std::move(c), t);
}

struct SearchLimits {
  std::size_t max_order = kDefaultMaxOrder;
  LatticeLimits lattice{};
};

struct SearchOutcome {
  std::optional<RepresentationCertificate> certificate;
  /// Every abelian group tried, in the order tried.
  std::vector<AbelianSpec> searched;
  std::vector<std::int64_t> multipliers;
  std::int64_t largest_order_searched = 0;

  bool found() const noexcept { return certificate.has_value(); }
};

/// Exhaustive search for (A, A_1, ..., A_n) matching a target index table.
/// Keeps the subgroup lattices of abelian groups it has built, and remembers
/// results per (order, index table), so one instance can serve many queries.
class RepresentationSearcher {
 public:
  explicit RepresentationSearcher(SearchLimits limits = {}) : limits_(limits) {}

  SearchOutcome find(const SubgroupTuple& t, const std::vector<std::int64_t>& multipliers = {1}) {
    SearchOutcome out;
    out.multipliers = multipliers;
    auto table = entropic_vector(t).indices;
    const auto order = static_cast<std::int64_t>(t.group().order());
    for (auto c : multipliers) {
      if (c < 1) throw Error(ErrorKind::InvalidParameter, "multipliers must be positive");
      const auto target_order = c * order;
      if (target_order > static_cast<std::int64_t>(limits_.max_order))
        throw Error(ErrorKind::BoundExceeded,
                    "abelian order " + std::to_string(target_order) + " exceeds search bound");
      out.largest_order_searched = std::max(out.largest_order_searched, target_order);
      for (const auto& spec : enumerate_abelian_specs(target_order, limits_.max_order)) {
        out.searched.push_back(spec);
        if (auto parts = match(spec, t.n(), table)) {
          RepresentationCertificate cert;
          cert.abelian = spec;
          cert.parts = *parts;
          cert.index_table = table;
          out.certificate = retarget(std::move(cert), t);
          return out;
        }
      }
    }
    return out;
  }

  /// First (A_1, ..., A_n) in canonical lattice order whose index table is
  /// `table`, or nothing. Pure function of its arguments; memoized.
  std::optional<std::vector<std::vector<Element>>> match(const AbelianSpec& spec, std::size_t n,
                                                         const IndexTable& table) {
    auto key = std::make_tuple(spec.factors, n, table);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto result = n == 1 ? match_single(spec, table) : match_dfs(spec, n, table);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  struct Lattice {
    Group group;
    std::vector<Subgroup> subgroups;
  };

  const Lattice& lattice(const AbelianSpec& spec) {
    auto it = lattices_.find(spec.factors);
    if (it == lattices_.end()) {
      auto g = build_group(spec.group_spec(), limits_.max_order);
      auto subs = enumerate_subgroups(g, limits_.lattice);
      it = lattices_.emplace(spec.factors, Lattice{std::move(g), std::move(subs)}).first;
    }
    return it->second;
  }

  // n = 1 base case: the subgroup of matching index, first in canonical order
  // (for a cyclic A the only one).
  std::optional<std::vector<std::vector<Element>>> match_single(const AbelianSpec& spec, const IndexTable& table) {
    const auto& lat = lattice(spec);
    for (const auto& h : lat.subgroups)
      if (lat.group.order() / h.size() == table.at(1)) return std::vector<std::vector<Element>>{h.elements()};
    return std::nullopt;
  }

  std::optional<std::vector<std::vector<Element>>> match_dfs(const AbelianSpec& spec, std::size_t n,
                                                             const IndexTable& table) {
    const auto& lat = lattice(spec);
    const auto order = lat.group.order();
    // Singleton indices must be realizable before any pairing is attempted.
    std::vector<std::vector<const Subgroup*>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto idx = table.at(1U << i);
      if (idx == 0 || order % idx != 0) return std::nullopt;
      for (const auto& h : lat.subgroups)
        if (h.size() == order / idx) candidates[i].push_back(&h);
      if (candidates[i].empty()) return std::nullopt;
    }
    // inter[mask] = A_mask over the parts chosen so far
    std::vector<ElementSet> inter(std::size_t{1} << n);
    std::vector<const Subgroup*> chosen(n, nullptr);
    bool found = false;
    auto dfs = [&](auto&& self, std::size_t level) -> void {
      if (level == n) {
        found = true;
        return;
      }
      const Mask bit = 1U << level;
      for (const auto* h : candidates[level]) {
        bool ok = true;
        inter[bit] = h->members();
        for (Mask m = 1; m < bit && ok; ++m) {
          inter[m | bit] = inter[m] & h->members();
          ok = order / inter[m | bit].size() == table.at(m | bit);
        }
        if (!ok) continue;
        chosen[level] = h;
        self(self, level + 1);
        if (found) return;
      }
    };
    dfs(dfs, 0);
    if (!found) return std::nullopt;
    std::vector<std::vector<Element>> parts;
    for (const auto* h : chosen) parts.push_back(h->elements());
    return parts;
  }

  SearchLimits limits_;
  std::map<std::vector<std::int64_t>, Lattice> lattices_;
  std::map<std::tuple<std::vector<std::int64_t>, std::size_t, IndexTable>,
           std::optional<std::vector<std::vector<Element>>>>
      memo_;
};

inline SearchOutcome find_abelian_representation(const SubgroupTuple& t,
                                                 const std::vector<std::int64_t>& multipliers = {1},
                                                 const SearchLimits& limits = {}) {
  RepresentationSearcher searcher(limits);
  return searcher.find(t, multipliers);
}

namespace detail {

inline std::int64_t log_p(std::uint64_t x, std::uint64_t p) {
  std::int64_t e = 0;
  while (x > 1) {
    if (x % p != 0) throw Error(ErrorKind::DomainError, "order is not a power of " + std::to_string(p));
    x /= p;
    ++e;
  }
  return e;
}

}  // namespace detail

/// Certificate for a pair of subgroups of a nilpotent group: for each prime,
/// the elementary abelian construction on the Sylow components, then the
/// coprime product of those, re-targeted to (G, G_1, G_2).
inline RepresentationCertificate n2_nilpotent_certificate(const SubgroupTuple& t, const LatticeLimits& limits = {}) {
  if (t.n() != 2) throw Error(ErrorKind::ArityMismatch, "n = 2 certificate needs exactly two subgroups");
  const auto& g = t.group();
  auto lattice = enumerate_subgroups(g, limits);
  std::optional<RepresentationCertificate> acc;
  for (auto p : prime_divisors(g.order())) {
    auto s = sylow_subgroup(g, p, lattice);
    if (!is_normal(g, s)) throw Error(ErrorKind::DomainError, g.name() + " is not nilpotent");
    auto g1 = intersect(t[0], s), g2 = intersect(t[1], s), g12 = intersect(g1, g2);
    auto cert = n2_elementary_construction(static_cast<std::int64_t>(p), detail::log_p(g1.size(), p),
                                           detail::log_p(g2.size(), p), detail::log_p(g12.size(), p),
                                           detail::log_p(s.size(), p), limits.max_order);
    acc = acc ? combine_coprime(*acc, cert) : cert;
  }
  if (!acc) {
    // trivial group: both parts are the whole group
    RepresentationCertificate c;
    c.parts = {{0}, {0}};
    c.index_table = {{1, 1}, {2, 1}, {3, 1}};
    acc = c;
  }
  return retarget(std::move(*acc), t);
}

struct N2Classification {
  bool representable = false;
  /// Present for non-nilpotent groups.
  std::optional<NonNilpotentWitness> sylow_witness;
  std::optional<NonRepresentabilityWitness> witness;
};

/// n = 2: representable iff nilpotent. Non-nilpotent groups come with the
/// Sylow pair (S, S^x) and its index divisibility violation.
inline N2Classification classify_n2(const Group& g, const LatticeLimits& limits = {}) {
  N2Classification out;
  auto nn = non_nilpotent_witness(g, limits);
  if (!nn) {
    out.representable = true;
    return out;
  }
  SubgroupTuple pair(g, {nn->sylow, nn->conjugate}, /*include_improper=*/true);
  out.witness = necessary_divisibility(pair);
  if (!out.witness)
    throw Error(ErrorKind::RelationInconsistency, "Sylow pair of " + g.name() + " satisfies divisibility");
  out.sylow_witness = std::move(nn);
  return out;
}

}  // namespace grouprep
