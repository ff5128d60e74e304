// grouprep: build groups, list subgroups, compute entropic vectors, search
// for abelian representations, and run the reproduction suite.
//
// Exit codes: 0 success, 1 a check or validation failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouprep/grouprep.hpp"

namespace {

using namespace grouprep;

struct Globals {
  std::size_t bound = kDefaultMaxOrder;
  std::string format = "json";
  std::vector<std::int64_t> multipliers{1};
  bool include_improper = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or @path / a path to a file holding it.
GroupSpec load_spec(const std::string& arg) {
  auto text = arg;
  if (!text.empty() && text[0] == '@')
    text = read_file(text.substr(1));
  else if (text.find('{') == std::string::npos)
    text = read_file(text);
  return parse_spec(text);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_group(const Globals& gl, const std::string& spec_arg) {
  auto spec = load_spec(spec_arg);
  auto g = build_group(spec, gl.bound);
  auto rep = validate_group(g);
  if (gl.format == "csv") {
    std::cout << "element,label\n";
    for (Element x = 0; x < g.order(); ++x) std::cout << x << ',' << '"' << g.label(x) << '"' << '\n';
  } else {
    json j;
    j["group"] = spec_to_json(spec);
    j["name"] = g.name();
    j["order"] = g.order();
    j["abelian"] = g.is_abelian();
    j["valid"] = rep.ok();
    j["labels"] = g.labels();
    emit(j);
  }
  return rep.ok() ? 0 : 1;
}

int cmd_subgroups(const Globals& gl, const std::string& spec_arg) {
  auto g = build_group(load_spec(spec_arg), gl.bound);
  auto lattice = enumerate_subgroups(g, LatticeLimits{gl.bound, LatticeLimits{}.max_subgroups});
  if (gl.format == "csv")
    std::cout << subgroups_to_csv(lattice);
  else
    emit(subgroups_to_json(g, lattice));
  return 0;
}

SubgroupTuple load_tuple(const Globals& gl, const Group& g, const std::vector<std::string>& selectors) {
  if (selectors.empty()) throw UsageError("at least one --sub selector is required");
  std::vector<Subgroup> lattice;
  for (const auto& s : selectors)
    if (!s.empty() && s.front() == '#') {
      lattice = enumerate_subgroups(g, LatticeLimits{gl.bound, LatticeLimits{}.max_subgroups});
      break;
    }
  std::vector<Subgroup> parts;
  for (const auto& s : selectors) parts.push_back(parse_selector(g, s, lattice));
  return SubgroupTuple(g, std::move(parts), gl.include_improper);
}

int cmd_entropy(const Globals& gl, const std::string& spec_arg, const std::vector<std::string>& selectors,
                bool verify) {
  auto g = build_group(load_spec(spec_arg), gl.bound);
  auto t = load_tuple(gl, g, selectors);
  auto v = entropic_vector(t);
  std::optional<TheoremReport> rep;
  if (verify) rep = verify_theorem(t);
  if (gl.format == "csv") {
    std::cout << vector_to_csv(v);
  } else {
    auto j = vector_to_json(v);
    if (rep) {
      json r;
      r["ok"] = rep->ok;
      r["quasi_uniform"] = rep->quasi_uniform;
      r["max_deviation_below_1e-9"] = rep->max_deviation <= 1e-9;
      r["masks_checked"] = rep->masks_checked;
      r["failures"] = rep->failures;
      j["verify"] = r;
    }
    emit(j);
  }
  return rep && !rep->ok ? 1 : 0;
}

void emit_table(const IndexTable& t) {
  std::cout << "mask,index\n";
  for (const auto& [m, idx] : t) std::cout << m << ',' << idx << '\n';
}

int cmd_represent(const Globals& gl, const std::string& spec_arg, const std::vector<std::string>& selectors) {
  auto g = build_group(load_spec(spec_arg), gl.bound);
  auto t = load_tuple(gl, g, selectors);
  if (auto self = self_certificate(t)) {
    if (gl.format == "csv")
      emit_table(self->index_table);
    else
      emit(certificate_to_json(*self));
    return 0;
  }
  if (t.n() >= 2) {
    if (auto w = necessary_divisibility(t)) {
      if (gl.format == "csv")
        std::cout << "i1,i2,i12\n" << w->i1 << ',' << w->i2 << ',' << w->i12 << '\n';
      else
        emit(witness_to_json(*w));
      return 0;
    }
  }
  auto out = find_abelian_representation(t, gl.multipliers, SearchLimits{gl.bound, {}});
  if (out.certificate) {
    if (gl.format == "csv")
      emit_table(out.certificate->index_table);
    else
      emit(certificate_to_json(*out.certificate));
    return 0;
  }
  json j;
  j["kind"] = "not_found";
  j["multipliers"] = out.multipliers;
  j["largest_order_searched"] = out.largest_order_searched;
  json searched = json::array();
  for (const auto& s : out.searched) searched.push_back(s.factors);
  j["searched"] = searched;
  emit(j);
  return 0;
}

int cmd_classify(const Globals& gl, const std::string& spec_arg) {
  auto spec = load_spec(spec_arg);
  auto g = build_group(spec, gl.bound);
  LatticeLimits limits{gl.bound, LatticeLimits{}.max_subgroups};
  auto cls = classify_n2(g, limits);
  json j;
  j["group"] = spec_to_json(spec);
  j["nilpotent"] = cls.representable;
  j["n2"] = cls.representable ? "representable" : "not_representable";
  if (cls.sylow_witness) {
    json s;
    s["prime"] = cls.sylow_witness->prime;
    s["sylow"] = cls.sylow_witness->sylow.elements();
    s["conjugate"] = cls.sylow_witness->conjugate.elements();
    s["intersection"] = cls.sylow_witness->intersection.elements();
    s["conjugator"] = cls.sylow_witness->conjugator;
    j["sylow_pair"] = s;
  }
  if (cls.witness) j["witness"] = witness_to_json(*cls.witness);
  if (gl.format == "csv") {
    std::cout << "group,order,n2\n" << g.name() << ',' << g.order() << ',' << j["n2"].get<std::string>() << '\n';
  } else {
    emit(j);
  }
  return 0;
}

int cmd_repro(const Globals& gl, const std::string& suite, std::uint64_t seed, std::size_t tuples) {
  ReproOptions o;
  o.bound = gl.bound;
  o.seed = seed;
  o.tuples_per_group = tuples;
  std::vector<CriterionResult> results;
  try {
    results = run_repro(suite, o);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidParameter) throw UsageError(e.what());
    throw;
  }
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (gl.format == "csv") {
    std::cout << "id,name,status,skipped,summary\n";
    for (const auto& r : results)
      std::cout << r.id << ',' << r.name << ',' << (r.pass ? "pass" : "fail") << ',' << r.skipped << ",\""
                << r.summary << "\"\n";
  } else {
    json list = json::array();
    for (const auto& r : results) {
      json x;
      x["id"] = r.id;
      x["name"] = r.name;
      x["status"] = r.pass ? "pass" : "fail";
      x["summary"] = r.summary;
      x["skipped"] = r.skipped;
      x["details"] = r.details;
      if (!r.deviation.empty()) x["deviation"] = r.deviation;
      list.push_back(x);
    }
    json j;
    j["suites"] = list;
    j["all_pass"] = all;
    emit(j);
  }
  return all ? 0 : 1;
}

int cmd_check(const Globals& gl, const std::string& path) {
  json in;
  try {
    in = json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  const auto kind = in.value("kind", std::string{});
  CheckReport rep;
  if (kind == "certificate")
    rep = check_certificate(certificate_from_json(in), gl.bound);
  else if (kind == "witness")
    rep = check_witness(witness_from_json(in), gl.bound);
  else
    throw Error(ErrorKind::ParseError, "expected \"kind\": \"certificate\" or \"witness\"");
  json j;
  j["kind"] = kind;
  j["ok"] = rep.ok;
  j["failures"] = rep.failures;
  emit(j);
  return rep.ok ? 0 : 1;
}

bool is_usage(ErrorKind k) {
  return k == ErrorKind::ParseError || k == ErrorKind::InvalidParameter || k == ErrorKind::DomainError ||
         k == ErrorKind::ArityMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups, entropic vectors and abelian representability"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--bound", gl.bound, "maximum group order")->check(CLI::PositiveNumber);
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--multipliers", gl.multipliers, "abelian order multipliers for the search")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_flag("--include-improper", gl.include_improper, "admit trivial and whole subgroups in tuples");

  std::string spec;
  std::vector<std::string> subs;
  bool verify = false;
  std::string suite;
  std::uint64_t seed = ReproOptions{}.seed;
  std::size_t tuples = ReproOptions{}.tuples_per_group;
  std::string file;

  auto add_spec = [&](CLI::App* c) {
    c->add_option("--spec", spec, "group spec: inline JSON, @file or a file path")->required();
  };
  auto add_subs = [&](CLI::App* c) {
    c->add_option("--sub", subs, "subgroup selector: generator words (\"r^2\", \"r s,r^2\") or #lattice-index")
        ->required()
        ->take_all();
  };

  auto* group = app.add_subcommand("group", "build and validate a group");
  add_spec(group);
  auto* subgroups = app.add_subcommand("subgroups", "list the subgroup lattice in canonical order");
  add_spec(subgroups);
  auto* entropy = app.add_subcommand("entropy", "entropic vector of a subgroup tuple");
  add_spec(entropy);
  add_subs(entropy);
  entropy->add_flag("--verify", verify, "cross-check against the coset distribution");
  auto* represent = app.add_subcommand("represent", "certificate or witness for abelian representability");
  add_spec(represent);
  add_subs(represent);
  auto* classify = app.add_subcommand("classify", "n = 2 representability (nilpotency) with evidence");
  add_spec(classify);
  auto* repro = app.add_subcommand("repro", "run reproduction suites");
  repro->add_option("suite", suite, "suite name or \"all\"")->required();
  repro->add_option("--seed", seed, "seed for sampled tuples");
  repro->add_option("--tuples", tuples, "sampled tuples per group");
  auto* check = app.add_subcommand("check", "re-validate a certificate or witness file");
  check->add_option("file", file, "JSON file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*group) return cmd_group(gl, spec);
    if (*subgroups) return cmd_subgroups(gl, spec);
    if (*entropy) return cmd_entropy(gl, spec, subs, verify);
    if (*represent) return cmd_represent(gl, spec, subs);
    if (*classify) return cmd_classify(gl, spec);
    if (*repro) return cmd_repro(gl, suite, seed, tuples);
    if (*check) return cmd_check(gl, file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage(e.kind()) ? 2 : 1;
  }
  return 2;
}
