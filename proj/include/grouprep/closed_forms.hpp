#pragma once

// Closed-form member sets for the subgroups of D_{2^k}, QD^{-1}_{2^k},
// QD^{+1}_{2^k} and DiC_{2^{k-1}}, written directly on normal-form exponents
// (index i + j * 2^k for r^i s^j, resp. a^i x^j). Comparing these lists with
// enumerate_subgroups checks the subgroup classification element by element.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "grouprep/group.hpp"

namespace grouprep {

enum class TwoGroupFamily { Dihedral, QdMinus, QdPlus, Dicyclic };

namespace detail {

// {r^a : a = 0 mod 2^i} u {r^b s : b = c mod 2^i}; pass with_s = false for
// the rotation part only.
inline std::vector<Element> rotation_coset_set(std::int64_t n, std::int64_t step, bool with_s, std::int64_t c) {
  std::vector<Element> out;
  for (std::int64_t a = 0; a < n; a += step) out.push_back(static_cast<Element>(a));
  if (with_s)
    for (std::int64_t b = c % step; b < n; b += step) out.push_back(static_cast<Element>(b + n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// One member set from the classification, tagged with its type and the
/// parameters (i, j) it was written with (j = -1 when unused).
struct ClosedForm {
  int type = 1;
  std::int64_t i = 0;
  std::int64_t j = -1;
  std::vector<Element> members;
};

/// Every listed form of the family, in listing order, possibly with repeated
/// member sets. `k` is the exponent with 2^k the order of the cyclic part:
/// D_{2^k}, QD_{2^k}, DiC_{2^{k-1}}, each of order 2^{k+1}.
///
/// The trivial subgroup is included as <r^{2^k}> (resp. <a^{2^k}>), which
/// the classification leaves implicit. Type-2 forms are listed for every
/// (i, j) in range exactly as stated, without checking closure.
inline std::vector<ClosedForm> closed_forms(TwoGroupFamily family, std::int64_t k) {
  const auto n = std::int64_t{1} << k;
  std::vector<ClosedForm> out;
  auto add = [&](int type, std::int64_t i, std::int64_t j, std::vector<Element> m) {
    out.push_back({type, i, j, std::move(m)});
  };
  // type 1: <r^{2^i}>, 0 <= i <= k
  for (std::int64_t i = 0; i <= k; ++i) add(1, i, -1, detail::rotation_coset_set(n, std::int64_t{1} << i, false, 0));
  // type 2: <r^{2^i}, r^j s>, 0 <= i <= k-1, 0 <= j <= 2^i - 1
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = 0; j < (std::int64_t{1} << i); ++j)
      add(2, i, j, detail::rotation_coset_set(n, std::int64_t{1} << i, true, j));

  switch (family) {
    case TwoGroupFamily::Dihedral:
      // <r^a s> = {1, r^a s}
      for (std::int64_t a = 0; a < n; ++a) add(3, -1, a, {0, static_cast<Element>(a + n)});
      break;
    case TwoGroupFamily::QdMinus:
    case TwoGroupFamily::QdPlus:
      // type 3: <r^j s>
      for (std::int64_t j = 0; j < n; ++j) {
        if (family == TwoGroupFamily::QdMinus) {
          if (j % 2 == 0)
            add(3, -1, j, {0, static_cast<Element>(j + n)});
          else
            add(3, -1, j, detail::rotation_coset_set(n, n / 2, true, j));
        } else if (j == 0) {
          add(3, -1, j, {0, static_cast<Element>(n)});
        } else {
          // <r^{2j}, r^j s> with 2^i the exact power of 2 dividing 2j
          std::int64_t step = 2;
          while (j % step == 0) step *= 2;
          add(3, -1, j, detail::rotation_coset_set(n, std::min(step, n), true, j));
        }
      }
      break;
    case TwoGroupFamily::Dicyclic:
      // <a^j x> = <a^{2^{k-1}}, a^j x> is already type 2 with i = k - 1
      break;
  }
  return out;
}

/// Distinct member sets of closed_forms().
inline std::set<std::vector<Element>> closed_form_subgroups(TwoGroupFamily family, std::int64_t k) {
  std::set<std::vector<Element>> out;
  for (auto& f : closed_forms(family, k)) out.insert(std::move(f.members));
  return out;
}

}  // namespace grouprep
