#pragma once

// JSON and CSV forms of specs, subgroup lists, entropic vectors,
// certificates and witnesses. Objects are written with a fixed key order so
// identical inputs produce byte-identical output.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grouprep/certificate.hpp"
#include "grouprep/entropic.hpp"
#include "grouprep/group.hpp"
#include "grouprep/subgroups.hpp"

namespace grouprep {

using json = nlohmann::ordered_json;

inline json spec_to_json(const GroupSpec& s) {
  json j;
  j["family"] = family_name(s.family);
  switch (s.family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::Dicyclic: j["m"] = s.m; break;
    case Family::QuasidihedralMinus:
    case Family::QuasidihedralPlus: j["k"] = s.k; break;
    case Family::HeisenbergP3:
    case Family::ModularP3: j["p"] = s.p; break;
    case Family::AbelianProduct: j["factors"] = s.factors; break;
    case Family::DirectProduct:
      j["left"] = spec_to_json(s.operands.at(0));
      j["right"] = spec_to_json(s.operands.at(1));
      break;
    case Family::PermutationClosure: j["generators"] = s.generators; break;
  }
  return j;
}

inline GroupSpec spec_from_json(const json& j) {
  auto fail = [](const std::string& why) -> GroupSpec { throw Error(ErrorKind::ParseError, why); };
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) return fail("spec needs a \"family\"");
  auto family = family_from_name(j["family"].get<std::string>());
  if (!family) return fail("unknown family \"" + j["family"].get<std::string>() + "\"");
  auto integer = [&](const char* key) -> std::int64_t {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw Error(ErrorKind::ParseError, std::string(family_name(*family)) + " needs integer \"" + key + "\"");
    return j[key].get<std::int64_t>();
  };
  try {
    switch (*family) {
      case Family::Cyclic: return GroupSpec::cyclic(integer("m"));
      case Family::Dihedral: return GroupSpec::dihedral(integer("m"));
      case Family::Dicyclic: return GroupSpec::dicyclic(integer("m"));
      case Family::QuasidihedralMinus: return GroupSpec::quasidihedral_minus(integer("k"));
      case Family::QuasidihedralPlus: return GroupSpec::quasidihedral_plus(integer("k"));
      case Family::HeisenbergP3: return GroupSpec::heisenberg_p3(integer("p"));
      case Family::ModularP3: return GroupSpec::modular_p3(integer("p"));
      case Family::AbelianProduct:
        if (!j.contains("factors") || !j["factors"].is_array()) return fail("abelian_product needs \"factors\"");
        return GroupSpec::abelian_product(j["factors"].get<std::vector<std::int64_t>>());
      case Family::DirectProduct:
        if (!j.contains("left") || !j.contains("right")) return fail("direct_product needs \"left\" and \"right\"");
        return GroupSpec::direct_product(spec_from_json(j["left"]), spec_from_json(j["right"]));
      case Family::PermutationClosure:
        if (!j.contains("generators") || !j["generators"].is_array())
          return fail("permutation_closure needs \"generators\"");
        return GroupSpec::permutation_closure(j["generators"].get<std::vector<std::vector<std::int64_t>>>());
    }
  } catch (const nlohmann::json::exception& e) {
    return fail(e.what());
  }
  return fail("unhandled family");
}

inline GroupSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return spec_from_json(j);
}

inline json mask_table_to_json(const std::map<Mask, std::uint64_t>& t) {
  json j = json::object();
  for (const auto& [m, v] : t) j[std::to_string(m)] = v;
  return j;
}

inline std::map<Mask, std::uint64_t> mask_table_from_json(const json& j) {
  std::map<Mask, std::uint64_t> t;
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "index table must be an object");
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    unsigned long m = 0;
    try {
      m = std::stoul(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || m == 0 || !v.is_number_unsigned())
      throw Error(ErrorKind::ParseError, "bad index table entry \"" + k + "\"");
    t[static_cast<Mask>(m)] = v.get<std::uint64_t>();
  }
  return t;
}

inline json vector_to_json(const EntropicVector& v) {
  json j;
  j["n"] = v.n;
  if (v.log_base == std::floor(v.log_base))
    j["base"] = static_cast<std::int64_t>(v.log_base);
  else
    j["base"] = v.log_base;
  j["indices"] = mask_table_to_json(v.indices);
  return j;
}

inline std::string vector_to_csv(const EntropicVector& v) {
  std::ostringstream out;
  out << "mask,index,entropy\n";
  for (const auto& [m, idx] : v.indices) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v.entropy(m));
    out << m << ',' << idx << ',' << buf << '\n';
  }
  return out.str();
}

inline json certificate_to_json(const RepresentationCertificate& c) {
  json j;
  j["kind"] = "certificate";
  json target;
  target["group"] = c.target ? spec_to_json(*c.target) : json(nullptr);
  target["subgroups"] = c.target_parts;
  j["target"] = target;
  json ab;
  ab["factors"] = c.abelian.factors;
  ab["invariant_factors"] = c.abelian.canonical().factors;
  j["abelian"] = ab;
  j["parts"] = c.parts;
  j["index_table"] = mask_table_to_json(c.index_table);
  return j;
}

inline RepresentationCertificate certificate_from_json(const json& j) {
  try {
    RepresentationCertificate c;
    const auto& target = j.at("target");
    if (!target.at("group").is_null()) c.target = spec_from_json(target.at("group"));
    c.target_parts = target.at("subgroups").get<std::vector<std::vector<Element>>>();
    c.abelian.factors = j.at("abelian").at("factors").get<std::vector<std::int64_t>>();
    c.parts = j.at("parts").get<std::vector<std::vector<Element>>>();
    c.index_table = mask_table_from_json(j.at("index_table"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline json witness_to_json(const NonRepresentabilityWitness& w) {
  json j;
  j["kind"] = "witness";
  j["group"] = w.target ? spec_to_json(*w.target) : json(nullptr);
  j["subgroups"] = json::array({w.first, w.second});
  json idx;
  idx["i1"] = w.i1;
  idx["i2"] = w.i2;
  idx["i12"] = w.i12;
  j["indices"] = idx;
  return j;
}

inline NonRepresentabilityWitness witness_from_json(const json& j) {
  try {
    NonRepresentabilityWitness w;
    if (!j.at("group").is_null()) w.target = spec_from_json(j.at("group"));
    auto subs = j.at("subgroups").get<std::vector<std::vector<Element>>>();
    if (subs.size() != 2) throw Error(ErrorKind::ParseError, "witness needs exactly two subgroups");
    w.first = subs[0];
    w.second = subs[1];
    w.i1 = j.at("indices").at("i1").get<std::uint64_t>();
    w.i2 = j.at("indices").at("i2").get<std::uint64_t>();
    w.i12 = j.at("indices").at("i12").get<std::uint64_t>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline json subgroups_to_json(const Group& g, const std::vector<Subgroup>& lattice) {
  json j;
  j["group"] = g.spec() ? spec_to_json(*g.spec()) : json(nullptr);
  j["order"] = g.order();
  json list = json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    json h;
    h["index"] = i;
    h["size"] = lattice[i].size();
    h["members"] = lattice[i].elements();
    json labels = json::array();
    for (auto e : lattice[i].elements()) labels.push_back(g.label(e));
    h["labels"] = labels;
    list.push_back(h);
  }
  j["subgroups"] = list;
  return j;
}

inline std::string subgroups_to_csv(const std::vector<Subgroup>& lattice) {
  std::ostringstream out;
  out << "index,size,members\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << i << ',' << lattice[i].size() << ',';
    bool first = true;
    for (auto e : lattice[i].elements()) {
      out << (first ? "" : " ") << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

// Splits on commas outside (), [].
inline std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace detail

/// Element named by a word over the group's labels: either a label itself
/// ("r^3 s", "(1,0)") or a space-separated product of labelled elements
/// with integer powers ("s r^-1").
inline Element parse_word(const Group& g, const std::string& word) {
  const auto w = detail::trim(word);
  if (w.empty()) throw Error(ErrorKind::ParseError, "empty word");
  if (auto e = g.find_label(w)) return *e;
  std::istringstream in(w);
  std::string tok;
  Element acc = 0;
  while (in >> tok) {
    std::string base = tok;
    long long exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      const auto e = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        exp = std::stoll(e, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (e.empty() || used != e.size()) throw Error(ErrorKind::ParseError, "bad exponent in \"" + tok + "\"");
    }
    auto b = g.find_label(base);
    if (!b) throw Error(ErrorKind::ParseError, "unknown generator \"" + base + "\" in " + g.name());
    acc = g(acc, g.power(*b, exp));
  }
  return acc;
}

/// A subgroup selector: "#n" picks entry n of the canonical lattice,
/// anything else is a comma-separated generator list.
inline Subgroup parse_selector(const Group& g, const std::string& selector, const std::vector<Subgroup>& lattice) {
  const auto s = detail::trim(selector);
  if (!s.empty() && s[0] == '#') {
    std::size_t used = 0, idx = 0;
    try {
      idx = std::stoul(s.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() - 1) throw Error(ErrorKind::ParseError, "bad lattice index \"" + s + "\"");
    if (idx >= lattice.size())
      throw Error(ErrorKind::ParseError, "lattice index " + std::to_string(idx) + " out of range (" +
                                             std::to_string(lattice.size()) + " subgroups)");
    return lattice[idx];
  }
  std::vector<Element> gens;
  for (const auto& w : detail::split_top_level(s))
    if (!w.empty()) gens.push_back(parse_word(g, w));
  return generated_subgroup(g, gens);
}

}  // namespace grouprep
