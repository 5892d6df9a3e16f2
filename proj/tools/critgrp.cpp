#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "crit/decomp.hpp"
#include "crit/io.hpp"
#include "crit/randgen.hpp"

using namespace crit;
using nlohmann::json;

namespace {

// exit codes: 0 success, 1 parse error, 2 invariant/verification failure,
// 3 non-harmonic action
constexpr int kOk = 0, kParseError = 1, kInvariant = 2, kNonHarmonic = 3;

Instance load_with_action(const std::string& path) {
  Instance inst = load_instance(path);
  if (inst.action.n == 0)
    throw std::invalid_argument("this command requires an 'action' block in the input");
  return inst;
}

void require_harmonic(const Instance& inst) {
  HarmonicWitness w;
  if (!is_harmonic(inst.graph, inst.action, &w)) {
    std::ostringstream os;
    os << "action is not harmonic: element " << w.element << " fixes edge " << w.edge
       << " without swapping its endpoints";
    throw std::domain_error(os.str());
  }
}

std::string parity_name(ParityCase p) {
  switch (p) {
    case ParityCase::NOdd: return "n odd";
    case ParityCase::NEvenKappaOdd: return "n even, kappa odd";
    case ParityCase::NEvenKappaEven: return "n even, kappa even";
  }
  return "?";
}

int cmd_jacobian(const std::string& file, bool as_json) {
  Instance inst = load_instance(file);
  AbelianGroup j = jacobian(inst.graph);
  if (as_json) {
    json doc;
    json inv = json::array();
    for (const Int& d : j.invariant_factors()) inv.push_back(d.get_str());
    doc["invariant_factors"] = inv;
    doc["order"] = j.order().get_str();
    doc["group"] = j.str();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << j.str() << " (order " << j.order().get_str() << ")\n";
  }
  return kOk;
}

json orbit_json(const Multigraph& g, const OrbitInfo& o) {
  json jo;
  json members = json::array();
  for (int v : o.vertices) members.push_back(g.labels[size_t(v)]);
  jo["members"] = members;
  jo["type"] = orbit_type_name(o.type);
  jo["index"] = o.index;
  json main = json::array(), other = json::array();
  for (int v : o.main) main.push_back(g.labels[size_t(v)]);
  for (int v : o.other) other.push_back(g.labels[size_t(v)]);
  jo["labeling"] = main;
  if (!other.empty()) jo["labeling_other"] = other;
  return jo;
}

int cmd_orbits(const std::string& file, bool as_json) {
  Instance inst = load_with_action(file);
  require_harmonic(inst);
  ActionSummary s = classify_orbits(inst.graph, inst.action);
  if (as_json) {
    json doc;
    json orbits = json::array();
    for (const OrbitInfo& o : s.orbits) orbits.push_back(orbit_json(inst.graph, o));
    doc["orbits"] = orbits;
    doc["t1"] = s.t1;
    doc["t2"] = s.t2;
    doc["t3"] = s.t3;
    doc["kappa"] = s.kappa;
    doc["t_tilde"] = s.t_tilde;
    doc["parity"] = parity_name(s.parity);
    doc["generator_swap"] = s.action.swapped;
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  for (const OrbitInfo& o : s.orbits) {
    std::cout << "type " << orbit_type_name(o.type) << "  index " << o.index << "  {";
    for (size_t i = 0; i < o.vertices.size(); ++i)
      std::cout << (i ? "," : "") << inst.graph.labels[size_t(o.vertices[i])];
    std::cout << "}  labeling ";
    const char* slot = o.type == OrbitType::I ? "z" : (o.type == OrbitType::II ? "w" : "x");
    for (size_t i = 0; i < o.main.size(); ++i)
      std::cout << (i ? " " : "") << slot << i + 1 << "=" << inst.graph.labels[size_t(o.main[i])];
    for (size_t i = 0; i < o.other.size(); ++i)
      std::cout << " y" << i + 1 << "=" << inst.graph.labels[size_t(o.other[i])];
    std::cout << "\n";
  }
  std::cout << "t1=" << s.t1 << " t2=" << s.t2 << " t3=" << s.t3 << " kappa=" << s.kappa
            << " t_tilde=" << s.t_tilde << " parity: " << parity_name(s.parity)
            << (s.action.swapped ? " (generators swapped)" : "") << "\n";
  return kOk;
}

int cmd_quotient(const std::string& file, const std::string& by, bool as_json) {
  Instance inst = load_with_action(file);
  require_harmonic(inst);
  Subgroup sub;
  if (by == "sigma1") sub = Subgroup::Sigma1;
  else if (by == "sigma2") sub = Subgroup::Sigma2;
  else if (by == "tau") sub = Subgroup::Tau;
  else if (by == "full") sub = Subgroup::Full;
  else throw std::invalid_argument("--by must be one of sigma1, sigma2, tau, full");
  GraphMorphism phi = quotient_graph(inst.graph, inst.action, sub);
  if (as_json) {
    std::cout << morphism_to_json(phi) << "\n";
    return kOk;
  }
  std::cout << graph_to_json(phi.target) << "\n";
  for (size_t w = 0; w < phi.fibers.size(); ++w) {
    std::cout << phi.target.labels[w] << "  h_mult=" << phi.h_mult[w] << "  fiber {";
    for (size_t i = 0; i < phi.fibers[w].size(); ++i)
      std::cout << (i ? "," : "") << inst.graph.labels[size_t(phi.fibers[w][i])];
    std::cout << "}\n";
  }
  return kOk;
}

int cmd_member(const std::string& file, const std::string& set, const std::string& divisor_file,
               bool as_json) {
  Instance inst = load_with_action(file);
  require_harmonic(inst);
  std::ifstream in(divisor_file);
  if (!in) throw ParseError("cannot open divisor file: " + divisor_file);
  std::stringstream ss;
  ss << in.rdbuf();
  Divisor d = parse_divisor(ss.str(), inst.graph);
  LatticeSystem sys = make_system(inst.graph, inst.action);
  bool result;
  if (set == "P") result = sys.P.member(d);
  else if (set == "P12") result = sys.P12.member(d);
  else if (set == "P0") result = sys.P0.member(d);
  else if (set == "L") result = sys.L.member(d);
  else if (set == "Lprime") result = sys.Lp.member(d);
  else throw std::invalid_argument("--set must be one of P, P12, P0, L, Lprime");
  if (as_json) {
    json doc;
    doc["set"] = set;
    doc["member"] = result;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (result ? "member" : "not a member") << " of " << set << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& checks, bool as_json) {
  Instance inst = load_with_action(file);
  require_harmonic(inst);
  VerificationReport rep =
      checks == "main" ? verify_main(inst.graph, inst.action) : verify_all(inst.graph, inst.action);
  if (as_json) {
    std::cout << report_to_json(rep) << "\n";
  } else {
    for (const CheckRecord& c : rep.checks) {
      std::cout << verdict_name(c.verdict) << "  " << c.name << ": " << c.formula_value << " vs "
                << c.lattice_value;
      if (!c.note.empty()) std::cout << "  [" << c.note << "]";
      std::cout << "\n";
    }
    std::cout << "main theorem: " << rep.main.lhs.str() << "  ~  " << rep.main.rhs.str() << "\n";
    for (const CheckRecord& c : rep.main.per_prime)
      std::cout << "  " << verdict_name(c.verdict) << "  " << c.name << "\n";
    std::cout << (rep.all_passed() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    if (rep.ambiguity_flag)
      std::cout << "warning: some checks differ only in Z/2 factors (closed form ambiguous)\n";
  }
  return rep.all_passed() ? kOk : kInvariant;
}

void write_or_print(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot open output file: " + out);
    f << text << "\n";
  }
}

int cmd_gallery(const std::string& name, int n, const std::string& out) {
  Instance inst = gallery(name, n);
  write_or_print(instance_to_json(inst), out);
  return kOk;
}

std::vector<OrbitSpec> parse_spec(const std::string& text) {
  std::vector<OrbitSpec> spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--spec items must look like I:1, II:2, III:1");
    std::string type = item.substr(0, colon);
    OrbitSpec o;
    if (type == "I") o.type = OrbitType::I;
    else if (type == "II") o.type = OrbitType::II;
    else if (type == "III") o.type = OrbitType::III;
    else throw std::invalid_argument("--spec type must be I, II or III");
    o.index = std::stoi(item.substr(colon + 1));
    spec.push_back(o);
  }
  if (spec.empty()) throw std::invalid_argument("--spec is empty");
  return spec;
}

int cmd_gen(int n, const std::string& spec_text, int edges, std::uint64_t seed,
            const std::string& out) {
  Instance inst = random_harmonic(n, parse_spec(spec_text), edges, seed);
  write_or_print(instance_to_json(inst), out);
  return kOk;
}

int cmd_bench(const std::string& family, const std::string& range, bool as_json) {
  auto dots = range.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("range must look like 4..12");
  int lo = std::stoi(range.substr(0, dots));
  int hi = std::stoi(range.substr(dots + 2));
  if (lo < 2 || hi < lo) throw std::invalid_argument("invalid bench range");

  json rows = json::array();
  if (!as_json)
    std::cout << "size  direct_ms  decomposed_ms  ratio  agree\n";
  for (int sz = lo; sz <= hi; ++sz) {
    Instance inst = gallery(family, sz);
    int n = inst.action.n;
    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    AbelianGroup direct = prime_to_part(jacobian(inst.graph), Int(2 * n));
    auto t1 = clock::now();
    AbelianGroup fast = fast_jacobian_coprime_part(inst.graph, inst.action);
    auto t2 = clock::now();

    double direct_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double fast_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    bool agree = is_isomorphic(direct, fast);
    double ratio = fast_ms > 0 ? direct_ms / fast_ms : 0.0;
    if (as_json) {
      json row;
      row["size"] = sz;
      row["direct_ms"] = direct_ms;
      row["decomposed_ms"] = fast_ms;
      row["ratio"] = ratio;
      row["agree"] = agree;
      row["odd_part"] = fast.str();
      rows.push_back(row);
    } else {
      std::printf("%4d  %9.3f  %13.3f  %5.2f  %s\n", sz, direct_ms, fast_ms, ratio,
                  agree ? "yes" : "NO");
    }
    if (!agree) {
      if (as_json) std::cout << rows.dump(2) << "\n";
      std::cerr << "error: direct and decomposed results disagree at size " << sz << "\n";
      return kInvariant;
    }
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical groups of graphs with dihedral symmetry"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string file, by = "tau", set = "P", checks = "all", divisor_file, name, out;
  std::string spec_text, family, range;
  int n_param = 0, edges = 3;
  std::uint64_t seed = 1;

  auto* jac = app.add_subcommand("jacobian", "critical group of the input graph");
  jac->add_option("file", file)->required();

  auto* orb = app.add_subcommand("orbits", "orbit table of the action");
  orb->add_option("file", file)->required();

  auto* quo = app.add_subcommand("quotient", "quotient graph by a subgroup");
  quo->add_option("file", file)->required();
  quo->add_option("--by", by, "sigma1|sigma2|tau|full")->required();

  auto* mem = app.add_subcommand("member", "lattice membership of a divisor");
  mem->add_option("file", file)->required();
  mem->add_option("--set", set, "P|P12|P0|L|Lprime")->required();
  mem->add_option("--divisor", divisor_file, "divisor JSON file")->required();

  auto* ver = app.add_subcommand("verify", "run the verification report");
  ver->add_option("file", file)->required();
  ver->add_option("--checks", checks, "main|all");

  auto* gal = app.add_subcommand("gallery", "write a built-in instance");
  gal->add_option("name", name)->required();
  gal->add_option("--n", n_param, "family parameter");
  gal->add_option("-o,--out", out, "output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "write a random harmonic instance");
  gen->add_option("--n", n_param, "dihedral parameter")->required();
  gen->add_option("--spec", spec_text, "orbit spec, e.g. I:1,III:2")->required();
  gen->add_option("--edges", edges, "number of edge orbits");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--out", out, "output file (default stdout)");

  auto* ben = app.add_subcommand("bench", "direct vs decomposed odd-part timing");
  ben->add_option("family", family, "wheel|squareweb")->required();
  ben->add_option("range", range, "e.g. 4..12")->required();

  // allow the global --json flag after a subcommand name
  for (CLI::App* s : {jac, orb, quo, mem, ver, gal, gen, ben}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*jac) return cmd_jacobian(file, as_json);
    if (*orb) return cmd_orbits(file, as_json);
    if (*quo) return cmd_quotient(file, by, as_json);
    if (*mem) return cmd_member(file, set, divisor_file, as_json);
    if (*ver) {
      if (checks != "main" && checks != "all")
        throw std::invalid_argument("--checks must be main or all");
      return cmd_verify(file, checks, as_json);
    }
    if (*gal) return cmd_gallery(name, n_param, out);
    if (*gen) return cmd_gen(n_param, spec_text, edges, seed, out);
    if (*ben) return cmd_bench(family, range, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonHarmonic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
  return kOk;
}
