#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "grouprep/group.hpp"
#include "grouprep/subgroups.hpp"

namespace grouprep {

/// A finite abelian group as a product of cyclic factors. `factors` is the
/// list actually used to index elements (mixed radix, first factor most
/// significant); canonical() gives the invariant-factor form d_1, d_2, ...
/// with d_{i+1} | d_i, which identifies the isomorphism class.
struct AbelianSpec {
  std::vector<std::int64_t> factors;

  std::int64_t order() const {
    std::int64_t n = 1;
    for (auto f : factors) n *= f;
    return n;
  }

  GroupSpec group_spec() const { return GroupSpec::abelian_product(factors); }

  AbelianSpec canonical() const {
    std::map<std::int64_t, std::vector<std::int64_t>> powers;
    for (auto f : factors) {
      auto x = f;
      for (std::int64_t p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        std::int64_t q = 1;
        while (x % p == 0) {
          x /= p;
          q *= p;
        }
        powers[p].push_back(q);
      }
      if (x > 1) powers[x].push_back(x);
    }
    std::size_t rank = 0;
    for (auto& [p, qs] : powers) {
      std::sort(qs.rbegin(), qs.rend());
      rank = std::max(rank, qs.size());
    }
    AbelianSpec out;
    out.factors.assign(rank, 1);
    for (const auto& [p, qs] : powers)
      for (std::size_t i = 0; i < qs.size(); ++i) out.factors[i] *= qs[i];
    return out;
  }

  bool isomorphic_to(const AbelianSpec& o) const { return canonical().factors == o.canonical().factors; }

  friend bool operator==(const AbelianSpec&, const AbelianSpec&) = default;
};

namespace detail {

// Partitions of e in descending parts, listed with larger first parts first:
// 3 -> (3), (2,1), (1,1,1).
inline void partitions(std::int64_t e, std::int64_t max_part, std::vector<std::int64_t>& cur,
                       std::vector<std::vector<std::int64_t>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (auto part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Every abelian group of order n up to isomorphism, in invariant-factor
/// form. Order: primes ascending, and for each prime the partitions of its
/// exponent as listed by detail::partitions; the cyclic group comes first.
inline std::vector<AbelianSpec> enumerate_abelian_specs(std::int64_t n, std::size_t max_order = kDefaultMaxOrder) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "order must be positive");
  if (n > static_cast<std::int64_t>(max_order))
    throw Error(ErrorKind::BoundExceeded, "abelian order " + std::to_string(n) + " exceeds bound");
  std::vector<std::pair<std::int64_t, std::vector<std::vector<std::int64_t>>>> per_prime;
  for (auto p : prime_divisors(static_cast<std::size_t>(n))) {
    std::int64_t e = 0;
    for (auto x = n; x % static_cast<std::int64_t>(p) == 0; x /= static_cast<std::int64_t>(p)) ++e;
    std::vector<std::vector<std::int64_t>> parts;
    std::vector<std::int64_t> cur;
    detail::partitions(e, e, cur, parts);
    per_prime.emplace_back(static_cast<std::int64_t>(p), std::move(parts));
  }
  std::vector<AbelianSpec> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    AbelianSpec spec;
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& [p, parts] = per_prime[i];
      for (auto e : parts[choice[i]]) {
        std::int64_t q = 1;
        for (std::int64_t t = 0; t < e; ++t) q *= p;
        spec.factors.push_back(q);
      }
    }
    out.push_back(spec.canonical());
    // odometer, last prime fastest
    std::size_t i = per_prime.size();
    while (i > 0) {
      --i;
      if (++choice[i] < per_prime[i].second.size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (per_prime.empty()) return out;
  }
}

}  // namespace grouprep
