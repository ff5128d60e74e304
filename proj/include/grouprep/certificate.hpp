#pragma once

// Representation certificates and non-representability witnesses. Both are
// plain data that can be re-checked from scratch: the checker rebuilds every
// group from its spec, confirms each member set is a subgroup and recomputes
// all intersection indices on both sides.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "grouprep/abelian.hpp"
#include "grouprep/entropic.hpp"

namespace grouprep {

using IndexTable = std::map<Mask, std::uint64_t>;

/// (A, A_1, ..., A_n) together with the target it represents. The target
/// may be abstract (no spec, no parts) when only the index table is known.
struct RepresentationCertificate {
  std::optional<GroupSpec> target;
  std::vector<std::vector<Element>> target_parts;
  AbelianSpec abelian;
  std::vector<std::vector<Element>> parts;
  IndexTable index_table;

  std::size_t n() const noexcept { return parts.size(); }
};

struct NonRepresentabilityWitness {
  std::optional<GroupSpec> target;
  std::vector<Element> first;
  std::vector<Element> second;
  std::uint64_t i1 = 0;
  std::uint64_t i2 = 0;
  std::uint64_t i12 = 0;

  bool arithmetic_holds() const noexcept { return i12 == 0 || (i1 * i2) % i12 != 0; }
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

/// Index table of arbitrary member sets inside `g`; does not check closure.
inline IndexTable index_table_of(const Group& g, const std::vector<ElementSet>& parts) {
  IndexTable t;
  for (Mask m = 1; m <= full_mask(parts.size()); ++m) {
    ElementSet acc = ElementSet::full(g.order());
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (m & (1U << i)) acc &= parts[i];
    const auto sz = acc.size();
    t[m] = sz == 0 ? 0 : g.order() / sz;
  }
  return t;
}

namespace detail {

inline void check_side(const Group& g, const std::vector<std::vector<Element>>& parts, const IndexTable& expected,
                       const std::string& side, CheckReport& rep) {
  std::vector<ElementSet> sets;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto e : parts[i])
      if (e >= g.order()) {
        rep.fail(side + " part " + std::to_string(i + 1) + " has an out-of-range element");
        return;
      }
    auto s = ElementSet::from(g.order(), parts[i]);
    if (s.size() != parts[i].size()) rep.fail(side + " part " + std::to_string(i + 1) + " repeats elements");
    if (!is_subgroup(g, s)) rep.fail(side + " part " + std::to_string(i + 1) + " is not a subgroup");
    sets.push_back(std::move(s));
  }
  if (!rep.ok) return;
  auto actual = index_table_of(g, sets);
  for (const auto& [m, idx] : actual) {
    auto it = expected.find(m);
    if (it == expected.end())
      rep.fail("index table lacks mask " + std::to_string(m));
    else if (it->second != idx)
      rep.fail(side + " index for mask " + std::to_string(m) + " is " + std::to_string(idx) + ", table says " +
               std::to_string(it->second));
  }
}

}  // namespace detail

/// Independent re-validation; trusts nothing produced by the searcher.
inline CheckReport check_certificate(const RepresentationCertificate& c, std::size_t max_order = kDefaultMaxOrder) {
  CheckReport rep;
  if (c.index_table.size() != full_mask(c.n())) rep.fail("index table does not cover every nonempty mask");
  for (auto f : c.abelian.factors)
    if (f < 1) rep.fail("abelian factor below 1");
  if (!rep.ok) return rep;
  try {
    auto a = build_group(c.abelian.group_spec(), max_order);
    detail::check_side(a, c.parts, c.index_table, "abelian", rep);
    if (c.target) {
      if (c.target_parts.size() != c.n()) {
        rep.fail("target and abelian sides have different arity");
        return rep;
      }
      auto g = build_group(*c.target, max_order);
      detail::check_side(g, c.target_parts, c.index_table, "target", rep);
    } else if (!c.target_parts.empty()) {
      rep.fail("target parts given without a target group");
    }
  } catch (const Error& e) {
    rep.fail(e.what());
  }
  return rep;
}

inline CheckReport check_witness(const NonRepresentabilityWitness& w, std::size_t max_order = kDefaultMaxOrder) {
  CheckReport rep;
  if (!w.arithmetic_holds()) rep.fail("i12 divides i1*i2");
  if (!w.target) return rep;
  try {
    auto g = build_group(*w.target, max_order);
    std::vector<std::vector<Element>> parts{w.first, w.second};
    detail::check_side(g, parts, IndexTable{{1, w.i1}, {2, w.i2}, {3, w.i12}}, "target", rep);
  } catch (const Error& e) {
    rep.fail(e.what());
  }
  return rep;
}

/// Attaches a concrete target to a certificate after confirming the target's
/// index table equals the certificate's.
inline RepresentationCertificate retarget(RepresentationCertificate c, const SubgroupTuple& t) {
  if (t.n() != c.n()) throw Error(ErrorKind::ArityMismatch, "tuple and certificate differ in arity");
  auto v = entropic_vector(t);
  if (v.indices != c.index_table)
    throw Error(ErrorKind::CertificateMismatch, "target index table differs from the certificate's");
  c.target = t.group().spec();
  c.target_parts.clear();
  for (const auto& h : t.parts()) c.target_parts.push_back(h.elements());
  return c;
}

/// Direct product of two certificates over groups of coprime orders:
/// A x B with parts A_i x B_i; indices multiply mask by mask.
inline RepresentationCertificate combine_coprime(const RepresentationCertificate& cg,
                                                 const RepresentationCertificate& ch) {
  if (cg.n() != ch.n()) throw Error(ErrorKind::ArityMismatch, "certificates differ in arity");
  const auto na = static_cast<std::uint64_t>(cg.abelian.order());
  const auto nb = static_cast<std::uint64_t>(ch.abelian.order());
  if (std::gcd(na, nb) != 1)
    throw Error(ErrorKind::NotCoprime, "orders " + std::to_string(na) + " and " + std::to_string(nb));

  auto product_parts = [](const std::vector<std::vector<Element>>& x, const std::vector<std::vector<Element>>& y,
                          std::uint64_t ny) {
    std::vector<std::vector<Element>> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::vector<Element> members;
      for (auto a : x[i])
        for (auto b : y[i]) members.push_back(static_cast<Element>(a * ny + b));
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  };

  RepresentationCertificate out;
  out.abelian.factors = cg.abelian.factors;
  out.abelian.factors.insert(out.abelian.factors.end(), ch.abelian.factors.begin(), ch.abelian.factors.end());
  out.parts = product_parts(cg.parts, ch.parts, nb);
  for (const auto& [m, idx] : cg.index_table) out.index_table[m] = idx * ch.index_table.at(m);
  if (cg.target && ch.target && cg.target_parts.size() == cg.n() && ch.target_parts.size() == ch.n()) {
    const auto ta = build_group(*cg.target).order(), tb = build_group(*ch.target).order();
    if (std::gcd(ta, tb) != 1)
      throw Error(ErrorKind::NotCoprime, "target orders " + std::to_string(ta) + " and " + std::to_string(tb));
    out.target = GroupSpec::direct_product(*cg.target, *ch.target);
    out.target_parts = product_parts(cg.target_parts, ch.target_parts, tb);
  }
  return out;
}

}  // namespace grouprep
