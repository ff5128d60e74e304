#pragma once

// Finite groups as explicit multiplication tables, and constructors for the
// families used throughout the library: cyclic, abelian products, dihedral,
// the two quasi-dihedral 2-groups, dicyclic, the two non-abelian groups of
// order p^3, direct products and closures of permutations.
//
// Element 0 is always the identity. Family constructors enumerate normal-form
// words with the powers of the first generator first, so that element indices
// (and everything serialized from them) are reproducible.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouprep/element_set.hpp"
#include "grouprep/error.hpp"

namespace grouprep {

inline constexpr std::size_t kDefaultMaxOrder = 512;

enum class Family {
  Cyclic,
  AbelianProduct,
  Dihedral,
  QuasidihedralMinus,
  QuasidihedralPlus,
  Dicyclic,
  HeisenbergP3,
  ModularP3,
  DirectProduct,
  PermutationClosure,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "cyclic";
    case Family::AbelianProduct: return "abelian_product";
    case Family::Dihedral: return "dihedral";
    case Family::QuasidihedralMinus: return "quasidihedral_minus";
    case Family::QuasidihedralPlus: return "quasidihedral_plus";
    case Family::Dicyclic: return "dicyclic";
    case Family::HeisenbergP3: return "heisenberg_p3";
    case Family::ModularP3: return "modular_p3";
    case Family::DirectProduct: return "direct_product";
    case Family::PermutationClosure: return "permutation_closure";
  }
  return "unknown";
}

inline std::optional<Family> family_from_name(const std::string& name) {
  for (auto f : {Family::Cyclic, Family::AbelianProduct, Family::Dihedral, Family::QuasidihedralMinus,
                 Family::QuasidihedralPlus, Family::Dicyclic, Family::HeisenbergP3, Family::ModularP3,
                 Family::DirectProduct, Family::PermutationClosure}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

/// Parameters of a group family. Only the fields relevant to `family` are
/// meaningful: `m` (cyclic, dihedral, dicyclic), `k` (quasi-dihedral),
/// `p` (order-p^3 families), `factors` (abelian products), `operands`
/// (direct product, exactly two), `generators` (permutation closure).
struct GroupSpec {
  Family family = Family::Cyclic;
  std::int64_t m = 1;
  std::int64_t k = 0;
  std::int64_t p = 0;
  std::vector<std::int64_t> factors;
  std::vector<GroupSpec> operands;
  std::vector<std::vector<std::int64_t>> generators;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  static GroupSpec of(Family f) {
    GroupSpec s;
    s.family = f;
    return s;
  }
  static GroupSpec cyclic(std::int64_t m) {
    GroupSpec s = of(Family::Cyclic);
    s.m = m;
    return s;
  }
  static GroupSpec dihedral(std::int64_t m) {
    GroupSpec s = of(Family::Dihedral);
    s.m = m;
    return s;
  }
  static GroupSpec dicyclic(std::int64_t m) {
    GroupSpec s = of(Family::Dicyclic);
    s.m = m;
    return s;
  }
  static GroupSpec quasidihedral_minus(std::int64_t k) {
    GroupSpec s = of(Family::QuasidihedralMinus);
    s.k = k;
    return s;
  }
  static GroupSpec quasidihedral_plus(std::int64_t k) {
    GroupSpec s = of(Family::QuasidihedralPlus);
    s.k = k;
    return s;
  }
  static GroupSpec heisenberg_p3(std::int64_t p) {
    GroupSpec s = of(Family::HeisenbergP3);
    s.p = p;
    return s;
  }
  static GroupSpec modular_p3(std::int64_t p) {
    GroupSpec s = of(Family::ModularP3);
    s.p = p;
    return s;
  }
  static GroupSpec abelian_product(std::vector<std::int64_t> factors) {
    GroupSpec s = of(Family::AbelianProduct);
    s.factors = std::move(factors);
    return s;
  }
  static GroupSpec direct_product(GroupSpec left, GroupSpec right) {
    GroupSpec s = of(Family::DirectProduct);
    s.operands = {std::move(left), std::move(right)};
    return s;
  }
  static GroupSpec permutation_closure(std::vector<std::vector<std::int64_t>> gens) {
    GroupSpec s = of(Family::PermutationClosure);
    s.generators = std::move(gens);
    return s;
  }
};

/// Short human-readable name, e.g. "D_8", "QD-_8", "Z_4xZ_2".
inline std::string describe(const GroupSpec& s) {
  auto n = [](std::int64_t v) { return std::to_string(v); };
  switch (s.family) {
    case Family::Cyclic: return "Z_" + n(s.m);
    case Family::AbelianProduct: {
      if (s.factors.empty()) return "Z_1";
      std::string out;
      for (std::size_t i = 0; i < s.factors.size(); ++i) out += (i ? "xZ_" : "Z_") + n(s.factors[i]);
      return out;
    }
    case Family::Dihedral: return "D_" + n(s.m);
    case Family::QuasidihedralMinus: return "QD-_" + n(std::int64_t{1} << s.k);
    case Family::QuasidihedralPlus: return "QD+_" + n(std::int64_t{1} << s.k);
    case Family::Dicyclic: return "DiC_" + n(s.m);
    case Family::HeisenbergP3: return "Heis_" + n(s.p);
    case Family::ModularP3: return "Mod_" + n(s.p);
    case Family::DirectProduct:
      return "(" + describe(s.operands.at(0)) + ")x(" + describe(s.operands.at(1)) + ")";
    case Family::PermutationClosure: return "Perm[" + n(static_cast<std::int64_t>(s.generators.size())) + " gens]";
  }
  return "?";
}

struct ValidationReport {
  bool identity = true;
  bool latin_square = true;
  bool associative = true;
  std::vector<std::string> failures;

  bool ok() const noexcept { return identity && latin_square && associative; }
};

class Group {
 public:
  Group(std::size_t order, std::vector<Element> table, std::vector<std::string> labels = {},
        std::optional<GroupSpec> spec = std::nullopt)
      : order_(order), table_(std::move(table)), labels_(std::move(labels)), spec_(std::move(spec)) {
    if (order_ == 0 || table_.size() != order_ * order_)
      throw Error(ErrorKind::InvalidParameter, "table size does not match order");
    inverse_.assign(order_, 0);
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = b;
          break;
        }
  }

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element operator()(Element a, Element b) const noexcept { return mul(a, b); }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  Element conjugate(Element x, Element h) const noexcept { return mul(mul(x, h), inverse(x)); }

  Element power(Element a, std::int64_t e) const {
    auto n = static_cast<std::int64_t>(order_);
    e %= n;
    if (e < 0) e += n;
    Element r = 0;
    for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  std::size_t element_order(Element a) const noexcept {
    std::size_t k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const noexcept {
    for (Element a = 0; a < order_; ++a)
      for (Element b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  const std::vector<Element>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<GroupSpec>& spec() const noexcept { return spec_; }

  std::string label(Element a) const { return a < labels_.size() ? labels_[a] : std::to_string(a); }

  std::optional<Element> find_label(const std::string& word) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == word) return static_cast<Element>(i);
    return std::nullopt;
  }

  std::string name() const { return spec_ ? describe(*spec_) : "G_" + std::to_string(order_); }

  friend bool operator==(const Group& a, const Group& b) { return a.order_ == b.order_ && a.table_ == b.table_; }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::optional<GroupSpec> spec_;
};

inline ValidationReport validate_group(const Group& g) {
  ValidationReport rep;
  const auto n = g.order();
  for (Element x = 0; x < n; ++x) {
    if (g(0, x) != x || g(x, 0) != x) {
      rep.identity = false;
      rep.failures.push_back("identity fails at element " + std::to_string(x));
      break;
    }
  }
  std::vector<char> seen(n);
  for (Element a = 0; a < n && rep.latin_square; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      auto v = g(a, b);
      if (v >= n || seen[v]) {
        rep.latin_square = false;
        rep.failures.push_back("row " + std::to_string(a) + " is not a permutation");
        break;
      }
      seen[v] = 1;
    }
  }
  for (Element b = 0; b < n && rep.latin_square; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < n; ++a) {
      auto v = g(a, b);
      if (v >= n || seen[v]) {
        rep.latin_square = false;
        rep.failures.push_back("column " + std::to_string(b) + " is not a permutation");
        break;
      }
      seen[v] = 1;
    }
  }
  if (!rep.latin_square) {
    // associativity lookups would index out of range on a malformed table
    rep.associative = false;
    return rep;
  }
  for (Element a = 0; a < n && rep.associative; ++a)
    for (Element b = 0; b < n && rep.associative; ++b) {
      auto ab = g(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g(ab, c) != g(a, g(b, c))) {
          rep.associative = false;
          rep.failures.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")");
          break;
        }
      }
    }
  return rep;
}

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  auto r = a % n;
  return r < 0 ? r + n : r;
}

/// "r^3 s", "r", "1"; zero exponents are dropped.
inline std::string word(std::initializer_list<std::pair<const char*, std::int64_t>> parts) {
  std::string out;
  for (auto [sym, e] : parts) {
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += sym;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::InvalidParameter, msg);
}

inline void check_bound(std::int64_t order, std::size_t max_order) {
  if (order > static_cast<std::int64_t>(max_order))
    throw Error(ErrorKind::OrderOverflow,
                "group order " + std::to_string(order) + " exceeds bound " + std::to_string(max_order));
}

/// Builds a table from a normal-form multiplication rule on indices.
template <typename Mul>
std::vector<Element> tabulate(std::size_t n, Mul&& mul) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>(mul(a, b));
  return t;
}

// r^a s^j at index a + j*n, with s r s^-1 = r^z (z^2 = 1 mod n).
inline Group metacyclic_involution(std::int64_t n, std::int64_t z, const GroupSpec& spec) {
  auto N = static_cast<std::size_t>(2 * n);
  auto table = tabulate(N, [&](std::size_t x, std::size_t y) {
    auto a = static_cast<std::int64_t>(x) % n, j = static_cast<std::int64_t>(x) / n;
    auto b = static_cast<std::int64_t>(y) % n, l = static_cast<std::int64_t>(y) / n;
    auto twisted = j ? mod(z * b, n) : b;
    return mod(a + twisted, n) + ((j + l) % 2) * n;
  });
  std::vector<std::string> labels(N);
  for (std::int64_t j = 0; j < 2; ++j)
    for (std::int64_t a = 0; a < n; ++a) labels[a + j * n] = word({{"r", a}, {"s", j}});
  return Group(N, std::move(table), std::move(labels), spec);
}

inline Group build_cyclic(std::int64_t m, const GroupSpec& spec) {
  auto N = static_cast<std::size_t>(m);
  auto table = tabulate(N, [&](std::size_t a, std::size_t b) { return (a + b) % N; });
  std::vector<std::string> labels(N);
  for (std::int64_t a = 0; a < m; ++a) labels[a] = word({{"r", a}});
  return Group(N, std::move(table), std::move(labels), spec);
}

// Mixed radix with the first factor most significant, matching the
// direct-product indexing (a, b) -> a*|H| + b.
inline Group build_abelian_product(const std::vector<std::int64_t>& factors, const GroupSpec& spec) {
  std::size_t N = 1;
  for (auto f : factors) N *= static_cast<std::size_t>(f);
  const auto r = factors.size();
  auto digits = [&](std::size_t x) {
    std::vector<std::int64_t> d(r);
    for (std::size_t i = r; i-- > 0;) {
      d[i] = static_cast<std::int64_t>(x % static_cast<std::size_t>(factors[i]));
      x /= static_cast<std::size_t>(factors[i]);
    }
    return d;
  };
  auto table = tabulate(N, [&](std::size_t a, std::size_t b) {
    auto da = digits(a), db = digits(b);
    std::size_t out = 0;
    for (std::size_t i = 0; i < r; ++i)
      out = out * static_cast<std::size_t>(factors[i]) + static_cast<std::size_t>((da[i] + db[i]) % factors[i]);
    return out;
  });
  std::vector<std::string> labels(N);
  for (std::size_t x = 0; x < N; ++x) {
    if (x == 0) {
      labels[x] = "1";
      continue;
    }
    std::string s = "(";
    auto d = digits(x);
    for (std::size_t i = 0; i < r; ++i) s += (i ? "," : "") + std::to_string(d[i]);
    labels[x] = s + ")";
  }
  return Group(N, std::move(table), std::move(labels), spec);
}

// a^i x^j at index i + j*2m; x a = a^-1 x, x^2 = a^m.
inline Group build_dicyclic(std::int64_t m, const GroupSpec& spec) {
  const auto n = 2 * m;
  auto N = static_cast<std::size_t>(4 * m);
  auto table = tabulate(N, [&](std::size_t x, std::size_t y) {
    auto i = static_cast<std::int64_t>(x) % n, j = static_cast<std::int64_t>(x) / n;
    auto b = static_cast<std::int64_t>(y) % n, l = static_cast<std::int64_t>(y) / n;
    if (j == 0) return mod(i + b, n) + l * n;
    if (l == 0) return mod(i - b, n) + n;
    return mod(i - b + m, n);
  });
  std::vector<std::string> labels(N);
  for (std::int64_t j = 0; j < 2; ++j)
    for (std::int64_t i = 0; i < n; ++i) labels[i + j * n] = word({{"a", i}, {"x", j}});
  return Group(N, std::move(table), std::move(labels), spec);
}

// r^a s^b t^c at index a + p b + p^2 c; t central, s r = r s t.
inline Group build_heisenberg(std::int64_t p, const GroupSpec& spec) {
  auto N = static_cast<std::size_t>(p * p * p);
  auto unpack = [&](std::size_t x) {
    auto v = static_cast<std::int64_t>(x);
    return std::array<std::int64_t, 3>{v % p, (v / p) % p, v / (p * p)};
  };
  auto table = tabulate(N, [&](std::size_t x, std::size_t y) {
    auto [a, b, c] = unpack(x);
    auto [a2, b2, c2] = unpack(y);
    return mod(a + a2, p) + p * mod(b + b2, p) + p * p * mod(c + c2 + a2 * b, p);
  });
  std::vector<std::string> labels(N);
  for (std::size_t x = 0; x < N; ++x) {
    auto [a, b, c] = unpack(x);
    labels[x] = word({{"r", a}, {"s", b}, {"t", c}});
  }
  return Group(N, std::move(table), std::move(labels), spec);
}

// r^a s^b at index a + p^2 b; s r s^-1 = r^(1+p).
inline Group build_modular(std::int64_t p, const GroupSpec& spec) {
  const auto q = p * p;
  auto N = static_cast<std::size_t>(q * p);
  std::vector<std::int64_t> twist(static_cast<std::size_t>(p));
  twist[0] = 1;
  for (std::int64_t b = 1; b < p; ++b) twist[b] = mod(twist[b - 1] * (1 + p), q);
  auto table = tabulate(N, [&](std::size_t x, std::size_t y) {
    auto a = static_cast<std::int64_t>(x) % q, b = static_cast<std::int64_t>(x) / q;
    auto a2 = static_cast<std::int64_t>(y) % q, b2 = static_cast<std::int64_t>(y) / q;
    return mod(a + a2 * twist[b], q) + q * mod(b + b2, p);
  });
  std::vector<std::string> labels(N);
  for (std::int64_t b = 0; b < p; ++b)
    for (std::int64_t a = 0; a < q; ++a) labels[a + q * b] = word({{"r", a}, {"s", b}});
  return Group(N, std::move(table), std::move(labels), spec);
}

// Composition (x*y)(i) = x(y(i)). Elements are listed in breadth-first
// discovery order from the identity, right-multiplying by generators.
inline Group build_permutation_closure(const std::vector<std::vector<std::int64_t>>& gens, const GroupSpec& spec,
                                       std::size_t max_order) {
  std::size_t degree = gens.empty() ? 0 : gens.front().size();
  for (const auto& g : gens) {
    require(g.size() == degree, "permutation generators must share one degree");
    std::vector<char> hit(degree, 0);
    for (auto v : g) {
      require(v >= 0 && static_cast<std::size_t>(v) < degree && !hit[static_cast<std::size_t>(v)],
              "generator is not a permutation of 0..degree-1");
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }
  using Perm = std::vector<std::int64_t>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](const Perm& x, const Perm& y) {
    Perm out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = x[static_cast<std::size_t>(y[i])];
    return out;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto next = compose(elems[head], g);
      if (index.emplace(next, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(next));
        check_bound(static_cast<std::int64_t>(elems.size()), max_order);
      }
    }
  }
  const auto N = elems.size();
  auto table = tabulate(N, [&](std::size_t a, std::size_t b) { return index.at(compose(elems[a], elems[b])); });
  std::vector<std::string> labels(N);
  for (std::size_t x = 0; x < N; ++x) {
    std::string s = "[";
    for (std::size_t i = 0; i < degree; ++i) s += (i ? "," : "") + std::to_string(elems[x][i]);
    labels[x] = s + "]";
  }
  return Group(N, std::move(table), std::move(labels), spec);
}

}  // namespace detail

/// Predicted order of a family spec (permutation closures are not predicted
/// and report 0). Throws InvalidParameter on out-of-range parameters.
inline std::int64_t spec_order(const GroupSpec& s) {
  using detail::require;
  switch (s.family) {
    case Family::Cyclic:
      require(s.m >= 1, "cyclic requires m >= 1");
      return s.m;
    case Family::AbelianProduct: {
      std::int64_t n = 1;
      for (auto f : s.factors) {
        require(f >= 1, "abelian_product factors must be >= 1");
        require(n <= (std::int64_t{1} << 40) / f, "abelian_product order too large");
        n *= f;
      }
      return n;
    }
    case Family::Dihedral:
      require(s.m >= 3, "dihedral requires m >= 3");
      return 2 * s.m;
    case Family::QuasidihedralMinus:
    case Family::QuasidihedralPlus:
      require(s.k >= 3 && s.k <= 30, "quasidihedral requires k >= 3");
      return std::int64_t{1} << (s.k + 1);
    case Family::Dicyclic:
      require(s.m >= 2, "dicyclic requires m >= 2");
      return 4 * s.m;
    case Family::HeisenbergP3:
    case Family::ModularP3:
      require(detail::is_prime(s.p) && s.p < 100000, "p^3 families require a prime p");
      return s.p * s.p * s.p;
    case Family::DirectProduct: {
      require(s.operands.size() == 2, "direct_product needs exactly two operands");
      auto a = spec_order(s.operands[0]), b = spec_order(s.operands[1]);
      if (a == 0 || b == 0) return 0;
      require(a <= (std::int64_t{1} << 40) / b, "direct_product order too large");
      return a * b;
    }
    case Family::PermutationClosure: return 0;
  }
  return 0;
}

inline Group direct_product(const Group& g, const Group& h, std::size_t max_order = kDefaultMaxOrder);

/// Builds the group described by `spec` and validates the resulting table.
inline Group build_group(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder) {
  auto order = spec_order(spec);
  detail::check_bound(order, max_order);
  auto built = [&]() -> Group {
    switch (spec.family) {
      case Family::Cyclic: return detail::build_cyclic(spec.m, spec);
      case Family::AbelianProduct: return detail::build_abelian_product(spec.factors, spec);
      case Family::Dihedral: return detail::metacyclic_involution(spec.m, spec.m - 1, spec);
      case Family::QuasidihedralMinus: {
        auto n = std::int64_t{1} << spec.k;
        return detail::metacyclic_involution(n, n / 2 - 1, spec);
      }
      case Family::QuasidihedralPlus: {
        auto n = std::int64_t{1} << spec.k;
        return detail::metacyclic_involution(n, n / 2 + 1, spec);
      }
      case Family::Dicyclic: return detail::build_dicyclic(spec.m, spec);
      case Family::HeisenbergP3:
        if (spec.p == 2) return detail::metacyclic_involution(4, 3, spec);
        return detail::build_heisenberg(spec.p, spec);
      case Family::ModularP3:
        if (spec.p == 2) return detail::build_dicyclic(2, spec);
        return detail::build_modular(spec.p, spec);
      case Family::DirectProduct: {
        auto product = direct_product(build_group(spec.operands[0], max_order),
                                      build_group(spec.operands[1], max_order), max_order);
        return Group(product.order(), product.table(), product.labels(), spec);
      }
      case Family::PermutationClosure: return detail::build_permutation_closure(spec.generators, spec, max_order);
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family");
  }();
  auto report = validate_group(built);
  if (!report.ok())
    throw Error(ErrorKind::RelationInconsistency,
                describe(spec) + ": " + (report.failures.empty() ? "invalid table" : report.failures.front()));
  return built;
}

/// Element (a, b) sits at index a*|H| + b.
inline Group direct_product(const Group& g, const Group& h, std::size_t max_order) {
  const auto ng = g.order(), nh = h.order();
  detail::check_bound(static_cast<std::int64_t>(ng * nh), max_order);
  const auto N = ng * nh;
  auto table = detail::tabulate(N, [&](std::size_t x, std::size_t y) {
    auto a = static_cast<Element>(x / nh), b = static_cast<Element>(x % nh);
    auto c = static_cast<Element>(y / nh), d = static_cast<Element>(y % nh);
    return g(a, c) * nh + h(b, d);
  });
  std::vector<std::string> labels(N);
  for (std::size_t x = 0; x < N; ++x) {
    auto a = static_cast<Element>(x / nh), b = static_cast<Element>(x % nh);
    labels[x] = x == 0 ? "1" : "(" + g.label(a) + "," + h.label(b) + ")";
  }
  std::optional<GroupSpec> spec;
  if (g.spec() && h.spec()) spec = GroupSpec::direct_product(*g.spec(), *h.spec());
  return Group(N, std::move(table), std::move(labels), std::move(spec));
}

}  // namespace grouprep
