#pragma once

// Entropic vectors of subgroup tuples. The vector itself is kept at the index
// level ([G : G_A] as exact integers); logarithms appear only when presenting
// entropies and inside verify_theorem, which rebuilds the coset distribution
// of (XG_1, ..., XG_n) for X uniform on G and measures its Shannon entropies
// independently of the index computation.

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grouprep/subgroups.hpp"

namespace grouprep {

using Mask = unsigned;

inline Mask full_mask(std::size_t n) { return n == 0 ? 0U : ((1U << n) - 1U); }

struct EntropicVector {
  std::size_t n = 0;
  /// Nonempty mask -> [G : G_A]. Bit i of the mask is G_{i+1}.
  std::map<Mask, std::uint64_t> indices;
  double log_base = 2.0;

  std::uint64_t at(Mask m) const { return indices.at(m); }
  double entropy(Mask m) const { return std::log(static_cast<double>(at(m))) / std::log(log_base); }

  friend bool operator==(const EntropicVector& a, const EntropicVector& b) {
    return a.n == b.n && a.indices == b.indices;
  }
};

inline EntropicVector entropic_vector(const SubgroupTuple& t) {
  if (t.n() > 16) throw Error(ErrorKind::InvalidParameter, "at most 16 subgroups per tuple");
  EntropicVector v;
  v.n = t.n();
  const auto order = t.group().order();
  for (Mask m = 1; m <= full_mask(t.n()); ++m) v.indices[m] = order / t.intersection(m).size();
  return v;
}

/// Violations of the index-level polymatroid properties: divisibility along
/// inclusions and the multiplicative form of submodularity. Empty when sound.
inline std::vector<std::string> vector_invariant_violations(const EntropicVector& v) {
  std::vector<std::string> out;
  const auto top = full_mask(v.n);
  for (Mask a = 1; a <= top; ++a) {
    for (Mask b = 1; b <= top; ++b) {
      const auto ia = v.at(a), ib = v.at(b);
      if ((a & b) == a && ib % ia != 0)
        out.push_back("index of " + std::to_string(a) + " does not divide index of " + std::to_string(b));
      const auto iu = v.at(a | b);
      if ((a & b) != 0) {
        if (iu * v.at(a & b) > ia * ib)
          out.push_back("submodularity fails for masks " + std::to_string(a) + "," + std::to_string(b));
      } else if (iu > ia * ib) {
        out.push_back("subadditivity fails for masks " + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  return out;
}

/// Joint law of the coset tuple. Each coset is labelled by its smallest
/// element index; masses are exact numerators over `denominator` = |G|.
struct JointDistribution {
  std::size_t n = 0;
  std::uint64_t denominator = 1;
  std::map<std::vector<Element>, std::uint64_t> support;

  /// Marginal on the coordinates selected by `mask`.
  std::map<std::vector<Element>, std::uint64_t> marginal(Mask mask) const {
    std::map<std::vector<Element>, std::uint64_t> out;
    for (const auto& [atom, mass] : support) {
      std::vector<Element> key;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1U << i)) key.push_back(atom[i]);
      out[key] += mass;
    }
    return out;
  }
};

/// Left-coset representative (smallest index in gH) of every element.
inline std::vector<Element> coset_labels(const Group& g, const Subgroup& h) {
  std::vector<Element> label(g.order());
  auto members = h.elements();
  for (Element x = 0; x < g.order(); ++x) {
    Element best = g(x, members.front());
    for (auto e : members) best = std::min(best, g(x, e));
    label[x] = best;
  }
  return label;
}

inline JointDistribution joint_coset_distribution(const SubgroupTuple& t) {
  const auto& g = t.group();
  JointDistribution d;
  d.n = t.n();
  d.denominator = g.order();
  std::vector<std::vector<Element>> labels;
  for (const auto& h : t.parts()) labels.push_back(coset_labels(g, h));
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> atom(t.n());
    for (std::size_t i = 0; i < t.n(); ++i) atom[i] = labels[i][x];
    d.support[atom] += 1;
  }
  return d;
}

struct TheoremReport {
  double max_deviation = 0.0;
  bool quasi_uniform = true;
  bool ok = true;
  std::size_t masks_checked = 0;
  std::vector<std::string> failures;
};

/// Compares the Shannon entropy (base 2) of every marginal of the coset
/// distribution with log2 [G : G_A], and checks every marginal is uniform on
/// its support as exact rationals.
inline TheoremReport verify_theorem(const SubgroupTuple& t, double tol = 1e-9) {
  TheoremReport rep;
  auto v = entropic_vector(t);
  auto d = joint_coset_distribution(t);
  const double total = static_cast<double>(d.denominator);
  for (Mask m = 1; m <= full_mask(t.n()); ++m) {
    auto marg = d.marginal(m);
    double h = 0.0;
    const auto first = marg.begin()->second;
    for (const auto& [atom, mass] : marg) {
      const double pr = static_cast<double>(mass) / total;
      h -= pr * std::log2(pr);
      if (mass != first) {
        if (rep.quasi_uniform)
          rep.failures.push_back("marginal " + std::to_string(m) + " is not uniform on its support");
        rep.quasi_uniform = false;
      }
    }
    const double expected = std::log2(static_cast<double>(v.at(m)));
    const double dev = std::abs(h - expected);
    rep.max_deviation = std::max(rep.max_deviation, dev);
    if (dev > tol) rep.failures.push_back("entropy mismatch on mask " + std::to_string(m));
    ++rep.masks_checked;
  }
  rep.ok = rep.quasi_uniform && rep.max_deviation <= tol;
  return rep;
}

}  // namespace grouprep
