#pragma once

// Subgroup lattice machinery over explicit tables: closure, exhaustive
// enumeration, intersections, normality, conjugates, Sylow subgroups, the
// center and the nilpotency test built from them.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "grouprep/element_set.hpp"
#include "grouprep/error.hpp"
#include "grouprep/group.hpp"

namespace grouprep {

/// A subset of a parent group's elements that is closed under its table.
/// Value object: two subgroups are the same iff their member sets are.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(ElementSet members) : members_(std::move(members)) {}

  static Subgroup trivial(std::size_t parent_order) {
    ElementSet s(parent_order);
    s.insert(0);
    return Subgroup(std::move(s));
  }
  static Subgroup whole(std::size_t parent_order) { return Subgroup(ElementSet::full(parent_order)); }

  std::size_t parent_order() const noexcept { return members_.universe(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element e) const noexcept { return members_.contains(e); }
  bool is_trivial() const noexcept { return size() == 1; }
  bool is_whole() const noexcept { return size() == parent_order(); }

  const ElementSet& members() const noexcept { return members_; }
  std::vector<Element> elements() const { return members_.elements(); }

  bool is_subgroup_of(const Subgroup& o) const noexcept { return members_.is_subset_of(o.members_); }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  ElementSet members_;
};

/// Canonical order: by size, then lexicographically by ascending member list.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

struct LatticeLimits {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_subgroups = 250000;
};

namespace detail {

inline void same_parent(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorKind::ParentMismatch,
                "subgroups of groups of orders " + std::to_string(a) + " and " + std::to_string(b));
}

// Smallest superset of `start` closed under right multiplication by `gens`.
// When `start` is a subgroup contained in <gens>, this is <gens>.
inline ElementSet close_right(const Group& g, ElementSet start, std::span<const Element> gens) {
  std::vector<Element> queue = start.elements();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto y = queue[head];
    for (auto x : gens) {
      auto z = g(y, x);
      if (!start.contains(z)) {
        start.insert(z);
        queue.push_back(z);
      }
    }
  }
  return start;
}

}  // namespace detail

inline Subgroup generated_subgroup(const Group& g, std::span<const Element> gens) {
  for (auto x : gens)
    if (x >= g.order()) throw Error(ErrorKind::InvalidParameter, "generator index out of range");
  ElementSet start(g.order());
  start.insert(0);
  return Subgroup(detail::close_right(g, std::move(start), gens));
}

inline Subgroup generated_subgroup(const Group& g, std::initializer_list<Element> gens) {
  return generated_subgroup(g, std::span<const Element>(gens.begin(), gens.size()));
}

/// True iff `s` contains the identity and is closed under products and inverses.
inline bool is_subgroup(const Group& g, const ElementSet& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  auto elems = s.elements();
  for (auto a : elems) {
    if (!s.contains(g.inverse(a))) return false;
    for (auto b : elems)
      if (!s.contains(g(a, b))) return false;
  }
  return true;
}

inline Subgroup make_subgroup(const Group& g, const ElementSet& members) {
  if (!is_subgroup(g, members)) throw Error(ErrorKind::InvalidParameter, "member set is not a subgroup");
  return Subgroup(members);
}

/// All subgroups of `g`, each once, in canonical order. Seeds with the cyclic
/// subgroups and joins every discovered subgroup with every cyclic subgroup
/// until no new member set appears.
inline std::vector<Subgroup> enumerate_subgroups(const Group& g, const LatticeLimits& limits = {}) {
  const auto n = g.order();
  if (n > limits.max_order)
    throw Error(ErrorKind::BoundExceeded,
                "order " + std::to_string(n) + " exceeds lattice bound " + std::to_string(limits.max_order));

  struct Node {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::vector<Node> nodes;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

  std::vector<std::pair<ElementSet, Element>> cyclic;
  for (Element x = 0; x < n; ++x) {
    auto c = generated_subgroup(g, {x}).members();
    if (seen.emplace(c, nodes.size()).second) {
      nodes.push_back({c, {x}});
      cyclic.emplace_back(std::move(c), x);
    }
  }

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& [c, x] : cyclic) {
      if (c.is_subset_of(nodes[i].members)) continue;
      auto gens = nodes[i].gens;
      gens.push_back(x);
      auto joined = detail::close_right(g, nodes[i].members, gens);
      if (seen.emplace(joined, nodes.size()).second) {
        nodes.push_back({std::move(joined), std::move(gens)});
        if (nodes.size() > limits.max_subgroups)
          throw Error(ErrorKind::BoundExceeded,
                      "more than " + std::to_string(limits.max_subgroups) + " subgroups in " + g.name());
      }
    }
  }

  std::vector<std::pair<std::vector<Element>, Subgroup>> keyed;
  keyed.reserve(nodes.size());
  for (auto& node : nodes) {
    auto key = node.members.elements();
    keyed.emplace_back(std::move(key), Subgroup(std::move(node.members)));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Subgroup> out;
  out.reserve(keyed.size());
  for (auto& [k, s] : keyed) out.push_back(std::move(s));
  return out;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  detail::same_parent(a.parent_order(), b.parent_order());
  return Subgroup(a.members() & b.members());
}

inline std::size_t index(const Group& g, const Subgroup& h) {
  detail::same_parent(g.order(), h.parent_order());
  return g.order() / h.size();
}

inline Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, Element x) {
  detail::same_parent(g.order(), h.parent_order());
  ElementSet out(g.order());
  h.members().for_each([&](Element e) { out.insert(g.conjugate(x, e)); });
  return Subgroup(std::move(out));
}

inline bool is_normal(const Group& g, const Subgroup& h) {
  detail::same_parent(g.order(), h.parent_order());
  auto elems = h.elements();
  for (Element x = 0; x < g.order(); ++x)
    for (auto e : elems)
      if (!h.contains(g.conjugate(x, e))) return false;
  return true;
}

inline Subgroup center(const Group& g) {
  ElementSet z(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g(a, b) == g(b, a);
    if (central) z.insert(a);
  }
  return Subgroup(std::move(z));
}

/// Distinct primes dividing n, ascending.
inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing n.
inline std::size_t prime_part(std::size_t n, std::size_t p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline Subgroup sylow_subgroup(const Group& g, std::size_t p, std::span<const Subgroup> lattice) {
  if (p < 2 || !detail::is_prime(static_cast<std::int64_t>(p)) || g.order() % p != 0)
    throw Error(ErrorKind::PrimeDoesNotDivideOrder,
                std::to_string(p) + " is not a prime dividing " + std::to_string(g.order()));
  const auto target = prime_part(g.order(), p);
  for (const auto& h : lattice)
    if (h.size() == target) return h;
  throw Error(ErrorKind::RelationInconsistency, "no Sylow subgroup found in lattice");
}

/// First subgroup of order p^a (p^a exactly dividing |G|) in canonical order.
inline Subgroup sylow_subgroup(const Group& g, std::size_t p, const LatticeLimits& limits = {}) {
  if (p < 2 || !detail::is_prime(static_cast<std::int64_t>(p)) || g.order() % p != 0)
    throw Error(ErrorKind::PrimeDoesNotDivideOrder,
                std::to_string(p) + " is not a prime dividing " + std::to_string(g.order()));
  if (prime_part(g.order(), p) == g.order()) return Subgroup::whole(g.order());
  auto lattice = enumerate_subgroups(g, limits);
  return sylow_subgroup(g, p, lattice);
}

/// Normal Sylow subgroups for every prime dividing |G|; one per prime
/// suffices since a normal Sylow subgroup is the unique one.
inline bool is_nilpotent(const Group& g, const LatticeLimits& limits = {}) {
  auto primes = prime_divisors(g.order());
  if (primes.size() <= 1) return true;
  auto lattice = enumerate_subgroups(g, limits);
  for (auto p : primes)
    if (!is_normal(g, sylow_subgroup(g, p, lattice))) return false;
  return true;
}

struct NonNilpotentWitness {
  std::size_t prime = 0;
  Subgroup sylow;
  Subgroup conjugate;
  Subgroup intersection;
  Element conjugator = 0;
};

/// For a non-nilpotent group: a non-normal Sylow subgroup S (smallest such
/// prime), its first distinct conjugate S^x, and S n S^x.
inline std::optional<NonNilpotentWitness> non_nilpotent_witness(const Group& g, const LatticeLimits& limits = {}) {
  auto primes = prime_divisors(g.order());
  if (primes.size() <= 1) return std::nullopt;
  auto lattice = enumerate_subgroups(g, limits);
  for (auto p : primes) {
    auto s = sylow_subgroup(g, p, lattice);
    for (Element x = 0; x < g.order(); ++x) {
      auto c = conjugate_subgroup(g, s, x);
      if (c != s) return NonNilpotentWitness{p, s, c, intersect(s, c), x};
    }
  }
  return std::nullopt;
}

/// The product set HK = {hk}, enumerated.
inline ElementSet product_set(const Group& g, const Subgroup& h, const Subgroup& k) {
  detail::same_parent(h.parent_order(), k.parent_order());
  ElementSet out(g.order());
  auto ke = k.elements();
  h.members().for_each([&](Element a) {
    for (auto b : ke) out.insert(g(a, b));
  });
  return out;
}

/// A tuple (G_1, ..., G_n) of subgroups of one group. By default every part
/// must be non-trivial and proper; `include_improper` admits {1} and G.
class SubgroupTuple {
 public:
  SubgroupTuple(const Group& group, std::vector<Subgroup> parts, bool include_improper = false)
      : group_(&group), parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const auto& h = parts_[i];
      detail::same_parent(group.order(), h.parent_order());
      if (!is_subgroup(group, h.members()))
        throw Error(ErrorKind::InvalidParameter, "part " + std::to_string(i + 1) + " is not a subgroup");
      if (!include_improper && (h.is_trivial() || h.is_whole()))
        throw Error(ErrorKind::InvalidParameter,
                    "part " + std::to_string(i + 1) + " is trivial or the whole group (use include_improper)");
    }
  }

  const Group& group() const noexcept { return *group_; }
  const std::vector<Subgroup>& parts() const noexcept { return parts_; }
  std::size_t n() const noexcept { return parts_.size(); }
  const Subgroup& operator[](std::size_t i) const { return parts_.at(i); }

  /// G_A for a nonempty mask; bit i selects G_{i+1}.
  Subgroup intersection(unsigned mask) const {
    ElementSet acc = ElementSet::full(group_->order());
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (mask & (1U << i)) acc &= parts_[i].members();
    return Subgroup(std::move(acc));
  }

 private:
  const Group* group_;
  std::vector<Subgroup> parts_;
};

}  // namespace grouprep
