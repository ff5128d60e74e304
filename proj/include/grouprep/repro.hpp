#pragma once

// The reproduction suite: one runner per acceptance criterion. Runners are
// deterministic and print nothing; the CLI and the acceptance binary format
// the results.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "grouprep/bijection.hpp"
#include "grouprep/closed_forms.hpp"
#include "grouprep/corpus.hpp"
#include "grouprep/entropic.hpp"
#include "grouprep/p3.hpp"
#include "grouprep/representability.hpp"

namespace grouprep {

struct ReproOptions {
  /// Groups above this order are skipped (and counted as skipped).
  std::size_t bound = kDefaultMaxOrder;
  std::uint64_t seed = 20240229;
  std::size_t tuples_per_group = 200;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
  std::size_t skipped = 0;
  /// Set on a failure fully explained by a known misstatement in the
  /// classification being reproduced; empty otherwise.
  std::string deviation;
};

namespace detail {

inline std::vector<Subgroup> proper_subgroups(const std::vector<Subgroup>& lattice) {
  std::vector<Subgroup> out;
  for (const auto& h : lattice)
    if (!h.is_trivial() && !h.is_whole()) out.push_back(h);
  return out;
}

inline std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// Calls f on every non-decreasing index tuple of length 1..max_n over [0, count).
inline void for_each_multiset(std::size_t count, std::size_t max_n,
                              const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!idx.empty()) f(idx);
    if (idx.size() == max_n) return;
    for (std::size_t i = start; i < count; ++i) {
      idx.push_back(i);
      self(self, i);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

inline void fail(CriterionResult& r, std::string why) {
  r.pass = false;
  if (r.details.size() < 20) r.details.push_back(std::move(why));
}

}  // namespace detail

// 1. For sampled tuples (n <= 3) of every corpus group, the entropy of each
// marginal of the coset distribution equals log2 of the index.
inline CriterionResult repro_theorem_oracle(const ReproOptions& o) {
  CriterionResult r{1, "theorem-oracle", true, {}, {}, 0, {}};
  std::size_t groups = 0, tuples = 0;
  double worst = 0.0;
  std::size_t gi = 0;
  for (const auto& spec : corpus::theorem()) {
    ++gi;
    auto g = build_group(spec, std::max(o.bound, kDefaultMaxOrder));
    if (g.order() > o.bound) {
      ++r.skipped;
      continue;
    }
    ++groups;
    auto lattice = enumerate_subgroups(g);
    std::mt19937_64 rng(o.seed + gi);
    for (std::size_t s = 0; s < o.tuples_per_group; ++s) {
      const std::size_t n = 1 + rng() % 3;
      std::vector<Subgroup> parts;
      for (std::size_t i = 0; i < n; ++i) parts.push_back(lattice[rng() % lattice.size()]);
      SubgroupTuple t(g, std::move(parts), /*include_improper=*/true);
      auto rep = verify_theorem(t, 1e-9);
      ++tuples;
      worst = std::max(worst, rep.max_deviation);
      if (!rep.ok) detail::fail(r, g.name() + ": " + (rep.failures.empty() ? "failed" : rep.failures.front()));
      auto bad = vector_invariant_violations(entropic_vector(t));
      if (!bad.empty()) detail::fail(r, g.name() + ": " + bad.front());
    }
  }
  r.summary = std::to_string(groups) + " groups, " + std::to_string(tuples) +
              " tuples, max entropy deviation " + detail::fmt_double(worst) + " (tol 1e-9)";
  return r;
}

// 2. Binary-digit map D_{2^k} -> Z_2^{k+1} preserves subgroups, k = 2, 3, 4.
inline CriterionResult repro_dihedral_psi(const ReproOptions& o) {
  CriterionResult r{2, "dihedral-psi", true, {}, {}, 0, {}};
  std::size_t subgroups = 0;
  for (std::int64_t k = 2; k <= 4; ++k) {
    if ((std::size_t{1} << (k + 1)) > o.bound) {
      ++r.skipped;
      continue;
    }
    auto psi = builtin_bijection(BuiltinMap::Dihedral2k, k, o.bound);
    auto rep = verify_subgroup_preserving(psi);
    subgroups += rep.subgroups_checked;
    if (!rep.ok())
      detail::fail(r, "k=" + std::to_string(k) + ": " + std::to_string(rep.not_closed.size()) +
                          " images not closed, " + std::to_string(rep.intersection_failures) +
                          " intersection failures");
  }
  r.summary = std::to_string(subgroups) + " subgroups checked across k=2..4";
  return r;
}

// 3. QD lattices equal the listed closed forms; the word-identity map to
// D_{2^k} preserves subgroups.
//
// For QD^{+1} the type-2 sets {r^a, r^b s : a = 0, b = j mod 2^i} are not
// closed when v_2(j) + 1 < i, because (r^j s)^2 = r^{2j(2^{k-2}+1)}. Those
// forms are expected to be missing from the lattice; the result then fails
// strictly and carries a deviation note. Any other mismatch is unexplained.
inline CriterionResult repro_quasidihedral(const ReproOptions& o) {
  CriterionResult r{3, "quasidihedral", true, {}, {}, 0, {}};
  std::size_t compared = 0, not_closed = 0;
  bool explained = true;
  for (std::int64_t k = 3; k <= 4; ++k) {
    if ((std::size_t{1} << (k + 1)) > o.bound) {
      r.skipped += 2;
      continue;
    }
    for (auto [map, fam] : {std::pair{BuiltinMap::QdMinus, TwoGroupFamily::QdMinus},
                            std::pair{BuiltinMap::QdPlus, TwoGroupFamily::QdPlus}}) {
      auto psi = builtin_bijection(map, k, o.bound);
      const auto& g = psi.source;
      const std::string tag = g.name();
      std::set<std::vector<Element>> lattice;
      for (const auto& h : enumerate_subgroups(g)) lattice.insert(h.elements());
      auto forms = closed_forms(fam, k);
      std::set<std::vector<Element>> listed;
      for (const auto& f : forms) listed.insert(f.members);
      compared += lattice.size();
      for (const auto& h : lattice)
        if (!listed.count(h)) {
          explained = false;
          detail::fail(r, tag + ": a subgroup of order " + std::to_string(h.size()) + " matches no listed form");
        }
      for (const auto& f : forms) {
        if (lattice.count(f.members)) continue;
        std::int64_t v2 = 0;
        while (f.j > 0 && (f.j >> v2) % 2 == 0) ++v2;
        const bool predicted = fam == TwoGroupFamily::QdPlus && f.type == 2 && f.j > 0 && v2 + 1 < f.i &&
                               !is_subgroup(g, ElementSet::from(g.order(), f.members));
        explained = explained && predicted;
        ++not_closed;
        detail::fail(r, tag + ": listed type-" + std::to_string(f.type) + " set (i=" + std::to_string(f.i) +
                            ", j=" + std::to_string(f.j) + ") is not a subgroup");
      }
      if (fam == TwoGroupFamily::QdMinus) {
        const auto n = std::int64_t{1} << k;
        for (std::int64_t j = 1; j < n; j += 2) {
          std::vector<Element> odd{0, static_cast<Element>(n / 2), static_cast<Element>(n + j),
                                   static_cast<Element>(n + (j + n / 2) % n)};
          std::sort(odd.begin(), odd.end());
          auto gen = generated_subgroup(g, {static_cast<Element>(n + j)}).elements();
          if (gen != odd || !lattice.count(odd)) {
            explained = false;
            detail::fail(r, tag + ": odd-j form differs at j=" + std::to_string(j));
          }
        }
      }
      if (!verify_subgroup_preserving(psi).ok()) {
        explained = false;
        detail::fail(r, tag + ": identity map to D is not subgroup preserving");
      }
    }
  }
  r.summary = std::to_string(compared) + " subgroups, each a listed form; " + std::to_string(not_closed) +
              " listed forms are not subgroups; identity maps preserve subgroups";
  if (!r.pass && explained)
    r.deviation = "QD+ type-2 sets with v2(j)+1 < i are not closed under multiplication; every actual subgroup is listed";
  return r;
}

// 4. DiC_{2^{k-1}} -> D_{2^k} -> Z_2^{k+1}: every tuple with n <= 3 gets a
// transferred certificate that validates.
inline CriterionResult repro_dicyclic(const ReproOptions& o) {
  CriterionResult r{4, "dicyclic", true, {}, {}, 0, {}};
  std::size_t tuples = 0;
  for (std::int64_t k = 3; k <= 4; ++k) {
    if ((std::size_t{1} << (k + 1)) > o.bound) {
      ++r.skipped;
      continue;
    }
    auto to_d = builtin_bijection(BuiltinMap::Dicyclic2k, k, o.bound);
    auto to_a = builtin_bijection(BuiltinMap::Dihedral2k, k, o.bound);
    const std::string tag = to_d.source.name();
    if (!verify_subgroup_preserving(to_d).ok()) detail::fail(r, tag + ": map to D is not subgroup preserving");
    auto parts = detail::proper_subgroups(enumerate_subgroups(to_d.source));
    detail::for_each_multiset(parts.size(), 3, [&](const std::vector<std::size_t>& idx) {
      std::vector<Subgroup> chosen;
      for (auto i : idx) chosen.push_back(parts[i]);
      try {
        SubgroupTuple t(to_d.source, chosen);
        SubgroupTuple td(to_d.target, image_parts(to_d, t));
        SubgroupTuple ta(to_a.target, image_parts(to_a, td));
        auto cert_a = self_certificate(ta);
        auto cert = transfer_representation(to_d, t, transfer_representation(to_a, td, *cert_a));
        auto check = check_certificate(cert, o.bound);
        if (!check.ok) detail::fail(r, tag + ": " + check.failures.front());
        if (!cert.abelian.isomorphic_to(AbelianSpec{std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 2)}))
          detail::fail(r, tag + ": certificate is not in the elementary abelian group");
      } catch (const Error& e) {
        detail::fail(r, tag + ": " + e.what());
      }
      ++tuples;
    });
  }
  r.summary = std::to_string(tuples) + " tuples transferred and validated";
  return r;
}

// 5. n = 2: nilpotent iff every pair is represented at |A| = |G|.
inline CriterionResult repro_n2_classification(const ReproOptions& o) {
  CriterionResult r{5, "n2-classification", true, {}, {}, 0, {}};
  const std::size_t cap = std::min<std::size_t>(o.bound, 48);
  std::size_t groups = 0, nilpotent = 0, pairs = 0;
  RepresentationSearcher searcher(SearchLimits{cap, {}});
  for (const auto& spec : corpus::classification()) {
    auto g = build_group(spec, std::max(o.bound, kDefaultMaxOrder));
    if (g.order() > cap) {
      ++r.skipped;
      continue;
    }
    ++groups;
    const std::string tag = g.name();
    const bool nil = is_nilpotent(g);
    auto cls = classify_n2(g);
    if (cls.representable != nil) detail::fail(r, tag + ": classify_n2 disagrees with is_nilpotent");
    if (nil) {
      ++nilpotent;
      auto parts = detail::proper_subgroups(enumerate_subgroups(g));
      for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a; b < parts.size(); ++b) {
          SubgroupTuple t(g, {parts[a], parts[b]});
          ++pairs;
          auto found = searcher.find(t, {1});
          if (!found.certificate) {
            detail::fail(r, tag + ": no certificate at multiplier 1 for pair " + std::to_string(a) + "," +
                                std::to_string(b));
            continue;
          }
          if (!check_certificate(*found.certificate, cap).ok) detail::fail(r, tag + ": searched certificate invalid");
          if (!check_certificate(n2_nilpotent_certificate(t), cap).ok)
            detail::fail(r, tag + ": Sylow-wise construction invalid");
        }
    } else {
      if (!cls.witness || !cls.sylow_witness) {
        detail::fail(r, tag + ": no witness");
        continue;
      }
      if (!cls.witness->arithmetic_holds() || !check_witness(*cls.witness, cap).ok)
        detail::fail(r, tag + ": witness does not check");
      SubgroupTuple t(g, {cls.sylow_witness->sylow, cls.sylow_witness->conjugate});
      ++pairs;
      if (searcher.find(t, {1}).found()) detail::fail(r, tag + ": Sylow pair unexpectedly represented");
    }
  }
  if (groups < 30) detail::fail(r, "corpus has only " + std::to_string(groups) + " groups within the bound");
  r.summary = std::to_string(groups) + " groups (" + std::to_string(nilpotent) + " nilpotent), " +
              std::to_string(pairs) + " pairs searched";
  return r;
}

// 6. p-groups: every pair satisfies i + j - k <= m and the elementary
// abelian construction represents it.
inline CriterionResult repro_pgroup_n2(const ReproOptions& o) {
  CriterionResult r{6, "pgroup-n2", true, {}, {}, 0, {}};
  const std::size_t cap = std::min<std::size_t>(o.bound, 81);
  std::size_t groups = 0, pairs = 0;
  std::map<std::array<std::int64_t, 5>, RepresentationCertificate> built;
  for (const auto& spec : corpus::pgroups()) {
    auto g = build_group(spec, std::max(o.bound, kDefaultMaxOrder));
    if (g.order() > cap) {
      ++r.skipped;
      continue;
    }
    ++groups;
    const auto p = static_cast<std::int64_t>(prime_divisors(g.order()).front());
    const auto m = detail::log_p(g.order(), static_cast<std::uint64_t>(p));
    auto lattice = enumerate_subgroups(g);
    for (std::size_t a = 0; a < lattice.size(); ++a)
      for (std::size_t b = a; b < lattice.size(); ++b) {
        ++pairs;
        SubgroupTuple t(g, {lattice[a], lattice[b]}, /*include_improper=*/true);
        const auto i = detail::log_p(lattice[a].size(), static_cast<std::uint64_t>(p));
        const auto j = detail::log_p(lattice[b].size(), static_cast<std::uint64_t>(p));
        const auto k = detail::log_p(t.intersection(3).size(), static_cast<std::uint64_t>(p));
        if (!n2_inequality(i, j, k, m)) {
          detail::fail(r, g.name() + ": i+j-k > m for pair " + std::to_string(a) + "," + std::to_string(b));
          continue;
        }
        const std::array<std::int64_t, 5> key{p, i, j, k, m};
        auto it = built.find(key);
        if (it == built.end()) {
          auto cert = n2_elementary_construction(p, i, j, k, m, o.bound);
          auto check = check_certificate(cert, o.bound);
          if (!check.ok) detail::fail(r, "construction invalid: " + check.failures.front());
          it = built.emplace(key, std::move(cert)).first;
        }
        // target side re-checked against this pair in the already built group
        CheckReport rep;
        detail::check_side(g, {lattice[a].elements(), lattice[b].elements()}, it->second.index_table, "target", rep);
        if (!rep.ok) detail::fail(r, g.name() + ": " + rep.failures.front());
      }
  }
  r.summary = std::to_string(groups) + " p-groups, " + std::to_string(pairs) + " pairs, " +
              std::to_string(built.size()) + " distinct constructions";
  return r;
}

// 7. Q8 with <i>, <j>, <k>: the n = 3 exponent sum is 4 > 3, yet a
// certificate exists, in particular one in C_2^3.
inline CriterionResult repro_q8_boundary(const ReproOptions& o) {
  CriterionResult r{7, "q8-boundary", true, {}, {}, 0, {}};
  if (o.bound < 8) {
    r.skipped = 1;
    r.summary = "skipped";
    return r;
  }
  auto g = build_group(GroupSpec::dicyclic(2));
  auto sub = [&](const char* w) { return generated_subgroup(g, {*g.find_label(w)}); };
  SubgroupTuple t(g, {sub("a"), sub("x"), sub("a x")});
  auto e = [&](Mask m) { return detail::log_p(t.intersection(m).size(), 2); };
  const auto sum = e(1) + e(2) + e(4) - (e(3) + e(5) + e(6)) + e(7);
  if (sum != 4) detail::fail(r, "exponent sum is " + std::to_string(sum));
  const bool exceeds = sum > 3;
  if (!exceeds) detail::fail(r, "exponent sum does not exceed m = 3");

  auto found = find_abelian_representation(t, {1});
  std::string first = "none";
  if (!found.certificate || !check_certificate(*found.certificate).ok) {
    detail::fail(r, "search found no valid certificate");
  } else {
    first = describe(found.certificate->abelian.group_spec());
  }
  RepresentationSearcher searcher;
  AbelianSpec c2cubed{{2, 2, 2}};
  auto parts = searcher.match(c2cubed, 3, entropic_vector(t).indices);
  if (!parts) {
    detail::fail(r, "no certificate in C_2^3");
  } else {
    RepresentationCertificate cert;
    cert.abelian = c2cubed;
    cert.parts = *parts;
    cert.index_table = entropic_vector(t).indices;
    cert = retarget(std::move(cert), t);
    if (!check_certificate(cert).ok) detail::fail(r, "C_2^3 certificate invalid");
  }
  r.summary = "2+2+2-(1+1+1)+1 = " + std::to_string(sum) + " > 3; first certificate in " + first +
              (parts ? ", C_2^3 certificate validates" : "");
  return r;
}

// 8. The eight p^3 cases reproduce their index profiles; every distinct
// triple of both non-abelian groups of order 27 gets a valid certificate.
inline CriterionResult repro_p3_table(const ReproOptions& o) {
  CriterionResult r{8, "p3-table", true, {}, {}, 0, {}};
  std::size_t cases = 0;
  for (std::int64_t p : {2, 3, 5}) {
    if (static_cast<std::size_t>(p * p * p) > o.bound) {
      ++r.skipped;
      continue;
    }
    auto a = build_group(p3_abelian_spec(p).group_spec(), o.bound);
    for (const auto& c : p3_case_table()) {
      auto parts = instantiate_p3_case(c, p, a);
      std::vector<ElementSet> sets;
      for (const auto& h : parts) sets.push_back(h.members());
      auto table = index_table_of(a, sets);
      std::array<int, 7> got{};
      for (std::size_t i = 0; i < 7; ++i)
        got[i] = static_cast<int>(detail::log_p(table.at(kP3ProfileMasks[i]), static_cast<std::uint64_t>(p)));
      ++cases;
      if (got != c.exponents) detail::fail(r, "case " + std::to_string(c.id) + " at p=" + std::to_string(p));
    }
  }
  std::set<std::array<int, 7>> profiles;
  for (const auto& c : p3_case_table()) profiles.insert(c.exponents);

  std::size_t triples = 0, events = 0;
  std::map<int, std::size_t> hits;
  if (o.bound >= 27) {
    RepresentationSearcher searcher;
    for (const auto& spec : {GroupSpec::heisenberg_p3(3), GroupSpec::modular_p3(3)}) {
      auto g = build_group(spec);
      auto parts = detail::proper_subgroups(enumerate_subgroups(g));
      for (std::size_t x = 0; x < parts.size(); ++x)
        for (std::size_t y = x + 1; y < parts.size(); ++y)
          for (std::size_t z = y + 1; z < parts.size(); ++z) {
            SubgroupTuple t(g, {parts[x], parts[y], parts[z]});
            ++triples;
            try {
              auto out = p3_uniform_representation(t, &searcher);
              if (out.case_id) ++hits[*out.case_id];
              if (out.profile_not_in_table) {
                ++events;
                // a profile the table lists must never need the fallback
                std::array<std::size_t, 3> perm{0, 1, 2};
                do {
                  SubgroupTuple q(g, {t[perm[0]], t[perm[1]], t[perm[2]]});
                  if (profiles.count(p3_profile(q, 3)))
                    detail::fail(r, g.name() + ": tabulated profile fell back to search");
                } while (std::next_permutation(perm.begin(), perm.end()));
              }
              if (!check_certificate(out.certificate).ok) detail::fail(r, g.name() + ": certificate invalid");
            } catch (const Error& e) {
              detail::fail(r, g.name() + ": " + e.what());
            }
          }
    }
  } else {
    r.skipped += 2;
  }
  std::string by_case;
  for (const auto& [id, count] : hits) by_case += (by_case.empty() ? "" : " ") + std::to_string(id) + ":" + std::to_string(count);
  r.summary = std::to_string(cases) + " case instantiations; " + std::to_string(triples) +
              " order-27 triples validated; ProfileNotInTable events " + std::to_string(events) + "; cases {" +
              by_case + "}";
  return r;
}

// 9. D_6, D_12, DiC_3, DiC_6 are not representable for n = 2.
inline CriterionResult repro_non_nilpotent_corollary(const ReproOptions& o) {
  CriterionResult r{9, "non-nilpotent-corollary", true, {}, {}, 0, {}};
  std::string out;
  for (const auto& spec : {GroupSpec::dihedral(6), GroupSpec::dihedral(12), GroupSpec::dicyclic(3),
                           GroupSpec::dicyclic(6)}) {
    auto g = build_group(spec, std::max(o.bound, kDefaultMaxOrder));
    if (g.order() > o.bound) {
      ++r.skipped;
      continue;
    }
    auto cls = classify_n2(g);
    if (cls.representable || !cls.witness) {
      detail::fail(r, g.name() + " classified representable");
      continue;
    }
    const auto& w = *cls.witness;
    if (!w.arithmetic_holds() || !check_witness(w).ok) detail::fail(r, g.name() + ": witness does not check");
    out += (out.empty() ? "" : "; ") + g.name() + " (" + std::to_string(w.i1) + "," + std::to_string(w.i2) + "," +
           std::to_string(w.i12) + ")";
  }
  r.summary = "witnesses " + out;
  return r;
}

struct ReproSuite {
  const char* name;
  CriterionResult (*run)(const ReproOptions&);
};

inline const std::vector<ReproSuite>& repro_suites() {
  static const std::vector<ReproSuite> suites{
      {"theorem-oracle", repro_theorem_oracle},
      {"dihedral-psi", repro_dihedral_psi},
      {"quasidihedral", repro_quasidihedral},
      {"dicyclic", repro_dicyclic},
      {"n2-classification", repro_n2_classification},
      {"pgroup-n2", repro_pgroup_n2},
      {"q8-boundary", repro_q8_boundary},
      {"p3-table", repro_p3_table},
      {"non-nilpotent-corollary", repro_non_nilpotent_corollary},
  };
  return suites;
}

/// Runs one named suite, or every suite for "all". Unknown names throw.
inline std::vector<CriterionResult> run_repro(const std::string& name, const ReproOptions& o = {}) {
  std::vector<CriterionResult> out;
  for (const auto& s : repro_suites())
    if (name == "all" || name == s.name) out.push_back(s.run(o));
  if (out.empty()) throw Error(ErrorKind::InvalidParameter, "unknown suite \"" + name + "\"");
  return out;
}

}  // namespace grouprep
