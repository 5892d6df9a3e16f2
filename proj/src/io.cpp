#include "crit/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace crit {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
}

Multigraph graph_from_json(const json& jg) {
  if (!jg.is_object() || !jg.contains("vertices") || !jg.contains("edges"))
    throw ParseError("graph: expected object with 'vertices' and 'edges'");
  std::vector<std::string> labels;
  for (const auto& v : jg.at("vertices")) {
    if (!v.is_string()) throw ParseError("graph.vertices: labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : jg.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("graph.edges: each edge must be a pair of labels");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  try {
    return build_graph(labels, edges);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("graph: ") + ex.what());
  }
}

Perm perm_from_json(const json& jp, const Multigraph& g, const char* which) {
  if (jp.is_string()) return parse_cycles(jp.get<std::string>(), g);
  if (jp.is_object()) {
    Perm p(g.num_vertices());
    for (auto it = jp.begin(); it != jp.end(); ++it) {
      int from = g.vertex_index(it.key());
      if (from < 0) throw ParseError(std::string(which) + ": unknown vertex '" + it.key() + "'");
      if (!it.value().is_string())
        throw ParseError(std::string(which) + ": image must be a vertex label");
      int to = g.vertex_index(it.value().get<std::string>());
      if (to < 0)
        throw ParseError(std::string(which) + ": unknown image vertex '" +
                         it.value().get<std::string>() + "'");
      p.map[size_t(from)] = to;
    }
    if (!p.is_bijection()) throw ParseError(std::string(which) + ": map is not a permutation");
    return p;
  }
  throw ParseError(std::string(which) + ": expected cycle string or label map");
}

Perm edge_perm_from_json(const json& ja, const char* key, const Multigraph& g,
                         const Perm& vertex_perm) {
  if (ja.contains(key)) {
    const json& je = ja.at(key);
    if (!je.is_array() || int(je.size()) != g.num_edges())
      throw ParseError(std::string(key) + ": expected an array of " +
                       std::to_string(g.num_edges()) + " edge indices");
    std::vector<int> m;
    for (const auto& v : je) {
      if (!v.is_number_integer()) throw ParseError(std::string(key) + ": indices must be integers");
      int idx = v.get<int>();
      if (idx < 0 || idx >= g.num_edges())
        throw ParseError(std::string(key) + ": edge index out of range");
      m.push_back(idx);
    }
    Perm p(std::move(m));
    if (!p.is_bijection()) throw ParseError(std::string(key) + ": map is not a permutation");
    return p;
  }
  try {
    return derive_edge_perm(g, vertex_perm);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string(key) + " missing and not derivable: " + ex.what());
  }
}

}  // namespace

Perm parse_cycles(const std::string& text, const Multigraph& g) {
  Perm p(g.num_vertices());
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("cycle notation: expected '(' at position " +
                                         std::to_string(i));
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("cycle notation: unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      size_t start = i;
      while (i < text.size() && text[i] != ')' && text[i] != '(' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      std::string label = text.substr(start, i - start);
      int v = g.vertex_index(label);
      if (v < 0) throw ParseError("cycle notation: unknown vertex '" + label + "'");
      cycle.push_back(v);
    }
    for (size_t j = 0; j < cycle.size(); ++j) {
      int from = cycle[j], to = cycle[(j + 1) % cycle.size()];
      p.map[size_t(from)] = to;
    }
    skip_ws();
  }
  if (!p.is_bijection()) throw ParseError("cycle notation: cycles overlap");
  return p;
}

Multigraph parse_graph_json(const std::string& json_text) {
  return graph_from_json(parse_or_throw(json_text));
}

Instance parse_instance(const std::string& json_text) {
  json doc = parse_or_throw(json_text);
  if (!doc.is_object() || !doc.contains("graph"))
    throw ParseError("document: expected object with a 'graph' field");
  Instance inst;
  inst.graph = graph_from_json(doc.at("graph"));
  if (!doc.contains("action")) return inst;

  const json& ja = doc.at("action");
  if (!ja.is_object() || !ja.contains("n") || !ja.contains("sigma1") || !ja.contains("sigma2"))
    throw ParseError("action: expected object with 'n', 'sigma1', 'sigma2'");
  if (!ja.at("n").is_number_integer()) throw ParseError("action.n: expected an integer");
  int n = ja.at("n").get<int>();

  GeneratorPerm s1, s2;
  s1.vertex = perm_from_json(ja.at("sigma1"), inst.graph, "action.sigma1");
  s2.vertex = perm_from_json(ja.at("sigma2"), inst.graph, "action.sigma2");
  s1.edge = edge_perm_from_json(ja, "sigma1_edges", inst.graph, s1.vertex);
  s2.edge = edge_perm_from_json(ja, "sigma2_edges", inst.graph, s2.vertex);
  try {
    inst.action = validate_action(inst.graph, s1, s2, n);
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("action: ") + ex.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

namespace {

json graph_json_obj(const Multigraph& g) {
  json jg;
  jg["vertices"] = g.labels;
  json edges = json::array();
  for (auto [u, v] : g.edges)
    edges.push_back(json::array({g.labels[size_t(u)], g.labels[size_t(v)]}));
  jg["edges"] = edges;
  return jg;
}

std::string cycles_of(const Perm& p, const Multigraph& g) {
  std::string out;
  std::vector<bool> seen(size_t(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    if (seen[size_t(i)] || p(i) == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[size_t(j)]) {
      seen[size_t(j)] = true;
      out += (first ? "" : " ") + g.labels[size_t(j)];
      first = false;
      j = p(j);
    }
    out += ")";
  }
  return out;
}

}  // namespace

std::string graph_to_json(const Multigraph& g) { return graph_json_obj(g).dump(2); }

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["graph"] = graph_json_obj(inst.graph);
  if (inst.action.n > 0) {
    json ja;
    ja["n"] = inst.action.n;
    ja["sigma1"] = cycles_of(inst.action.sigma1.vertex, inst.graph);
    ja["sigma2"] = cycles_of(inst.action.sigma2.vertex, inst.graph);
    ja["sigma1_edges"] = inst.action.sigma1.edge.map;
    ja["sigma2_edges"] = inst.action.sigma2.edge.map;
    doc["action"] = ja;
  }
  return doc.dump(2);
}

Divisor parse_divisor(const std::string& json_text, const Multigraph& g) {
  json doc = parse_or_throw(json_text);
  if (!doc.is_object()) throw ParseError("divisor: expected an object of label -> value");
  Divisor d(g.num_vertices());
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    int v = g.vertex_index(it.key());
    if (v < 0) throw ParseError("divisor: unknown vertex '" + it.key() + "'");
    if (!it.value().is_number_integer())
      throw ParseError("divisor: value at '" + it.key() + "' must be an integer");
    d[v] = Int(it.value().get<long>());
  }
  return d;
}

namespace {

json check_json(const CheckRecord& c) {
  json jc;
  jc["name"] = c.name;
  jc["formula"] = c.formula_value;
  jc["computed"] = c.lattice_value;
  jc["verdict"] = verdict_name(c.verdict);
  if (!c.note.empty()) jc["note"] = c.note;
  return jc;
}

}  // namespace

std::string report_to_json(const VerificationReport& rep) {
  json doc;
  doc["generator_swap"] = rep.generator_swap;
  doc["ambiguity_flag"] = rep.ambiguity_flag;
  json checks = json::array();
  for (const CheckRecord& c : rep.checks) checks.push_back(check_json(c));
  doc["checks"] = checks;
  json main;
  main["lhs"] = rep.main.lhs.str();
  main["rhs"] = rep.main.rhs.str();
  json primes = json::array();
  for (const Int& p : rep.main.primes) primes.push_back(p.get_str());
  main["primes"] = primes;
  json per_prime = json::array();
  for (const CheckRecord& c : rep.main.per_prime) per_prime.push_back(check_json(c));
  main["per_prime"] = per_prime;
  main["passed"] = rep.main.passed;
  doc["main_theorem"] = main;
  doc["all_passed"] = rep.all_passed();
  return doc.dump(2);
}

std::string morphism_to_json(const GraphMorphism& phi) {
  json doc;
  doc["quotient"] = graph_json_obj(phi.target);
  json fibers = json::array();
  for (size_t w = 0; w < phi.fibers.size(); ++w) {
    json jf;
    jf["vertex"] = phi.target.labels[w];
    json members = json::array();
    for (int v : phi.fibers[w]) members.push_back(phi.source.labels[size_t(v)]);
    jf["fiber"] = members;
    jf["h_mult"] = phi.h_mult[w];
    fibers.push_back(jf);
  }
  doc["fibers"] = fibers;
  return doc.dump(2);
}

}  // namespace crit
