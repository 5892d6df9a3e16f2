#include "crit/gallery.hpp"

#include <map>
#include <stdexcept>

namespace crit {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;
using SwapList = std::vector<std::pair<std::string, std::string>>;

Perm perm_from_swaps(const Multigraph& g, const SwapList& swaps) {
  Perm p(g.num_vertices());
  for (const auto& [a, b] : swaps) {
    int ia = g.vertex_index(a), ib = g.vertex_index(b);
    if (ia < 0 || ib < 0) throw std::logic_error("gallery: unknown label in involution");
    p.map[size_t(ia)] = ib;
    p.map[size_t(ib)] = ia;
  }
  return p;
}

Instance make_instance(const std::vector<std::string>& labels, const EdgeList& edges,
                       const SwapList& s1, const SwapList& s2, int n) {
  Instance inst;
  inst.graph = build_graph(labels, edges);
  GeneratorPerm g1, g2;
  g1.vertex = perm_from_swaps(inst.graph, s1);
  g2.vertex = perm_from_swaps(inst.graph, s2);
  g1.edge = derive_edge_perm(inst.graph, g1.vertex);
  g2.edge = derive_edge_perm(inst.graph, g2.vertex);
  inst.action = validate_action(inst.graph, g1, g2, n);
  HarmonicWitness w;
  if (!is_harmonic(inst.graph, inst.action, &w))
    throw std::logic_error("gallery: action is not harmonic (element " + w.element + ")");
  return inst;
}

Instance make_k44() {
  std::vector<std::string> labels = {"z1", "z2", "z3", "z4", "w1", "w2", "x", "y"};
  EdgeList edges;
  for (const char* z : {"z1", "z2", "z3", "z4"})
    for (const char* r : {"w1", "w2", "x", "y"}) edges.emplace_back(z, r);
  return make_instance(labels, edges, {{"z1", "z4"}, {"z2", "z3"}, {"x", "y"}},
                       {{"z2", "z4"}, {"w1", "w2"}, {"x", "y"}}, 4);
}

Instance make_fig1_d3() {
  std::vector<std::string> labels = {"w1", "w2", "w3", "x1", "x2", "x3", "y1", "y2", "y3"};
  EdgeList edges = {{"w1", "w2"}, {"w2", "w3"}, {"w3", "w1"}, {"w1", "x1"},
                    {"w1", "y1"}, {"x1", "y3"}, {"w2", "x2"}, {"w2", "y2"},
                    {"x2", "y1"}, {"w3", "x3"}, {"w3", "y3"}, {"x3", "y2"}};
  // reflections in the vertical axis and in the diagonal through w1
  return make_instance(labels, edges,
                       {{"w1", "w3"}, {"x1", "y3"}, {"x2", "y2"}, {"x3", "y1"}},
                       {{"w2", "w3"}, {"x1", "y1"}, {"x2", "y3"}, {"x3", "y2"}}, 3);
}

Instance make_fig1_d4() {
  std::vector<std::string> labels = {"z1", "z2", "z3", "z4", "w1", "w2", "w3", "w4",
                                     "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"};
  EdgeList edges = {{"x1", "y1"}, {"y1", "x2"}, {"x2", "y2"}, {"y2", "x3"}, {"x3", "y3"},
                    {"y3", "x4"}, {"x4", "y4"}, {"y4", "x1"}, {"z1", "w1"}, {"w1", "z2"},
                    {"z2", "w2"}, {"w2", "z3"}, {"z3", "w3"}, {"w3", "z4"}, {"z4", "w4"},
                    {"w4", "z1"}, {"w4", "x1"}, {"w3", "x4"}, {"w2", "x3"}, {"w1", "x2"},
                    {"w1", "y1"}, {"w2", "y2"}, {"w3", "y3"}, {"w4", "y4"}};
  // reflections in the vertical axis and in the main diagonal
  return make_instance(
      labels, edges,
      {{"z1", "z4"}, {"z2", "z3"}, {"w1", "w3"}, {"x1", "y4"}, {"x2", "y3"}, {"x3", "y2"},
       {"x4", "y1"}},
      {{"z2", "z4"}, {"w1", "w4"}, {"w2", "w3"}, {"x1", "y1"}, {"x2", "y4"}, {"x3", "y3"},
       {"x4", "y2"}},
      4);
}

Instance make_octahedron() {
  std::vector<std::string> labels = {"a", "b", "c", "d", "x", "y"};
  EdgeList edges = {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"x", "a"}, {"x", "b"},
                    {"x", "c"}, {"x", "d"}, {"y", "a"}, {"y", "b"}, {"y", "c"}, {"y", "d"}};
  return make_instance(labels, edges, {{"a", "b"}, {"c", "d"}}, {{"a", "d"}, {"b", "c"}}, 2);
}

std::string vlabel(const std::string& base, int i) { return base + std::to_string(i); }

Instance make_wheel(int n) {
  if (n < 2) throw std::invalid_argument("gallery: wheel needs n >= 2");
  int rim = 2 * n;
  std::vector<std::string> labels;
  for (int i = 0; i < rim; ++i) labels.push_back(vlabel("v", i));
  labels.push_back("c");
  EdgeList edges;
  for (int i = 0; i < rim; ++i) edges.emplace_back(vlabel("v", i), vlabel("v", (i + 1) % rim));
  for (int i = 0; i < rim; ++i) edges.emplace_back("c", vlabel("v", i));
  // reflections through the midpoints of two adjacent rim edges
  SwapList s1, s2;
  for (int i = 0; i < rim; ++i) {
    int j1 = ((rim - 1 - i) % rim + rim) % rim;
    int j2 = ((1 - i) % rim + rim) % rim;
    if (i < j1) s1.emplace_back(vlabel("v", i), vlabel("v", j1));
    if (i < j2) s2.emplace_back(vlabel("v", i), vlabel("v", j2));
  }
  return make_instance(labels, edges, s1, s2, n);
}

Instance make_squareweb(int rings) {
  if (rings < 1) throw std::invalid_argument("gallery: squareweb needs n >= 1");
  std::vector<std::string> labels;
  for (int r = 1; r <= rings; ++r)
    for (const char* c : {"a", "b", "c", "d"}) labels.push_back(vlabel(c, r));
  labels.push_back("x");
  EdgeList edges;
  for (int r = 1; r <= rings; ++r) {
    edges.emplace_back(vlabel("a", r), vlabel("b", r));
    edges.emplace_back(vlabel("b", r), vlabel("c", r));
    edges.emplace_back(vlabel("c", r), vlabel("d", r));
    edges.emplace_back(vlabel("d", r), vlabel("a", r));
  }
  for (const char* c : {"a", "b", "c", "d"}) {
    edges.emplace_back("x", vlabel(c, 1));
    for (int r = 1; r < rings; ++r) edges.emplace_back(vlabel(c, r), vlabel(c, r + 1));
  }
  SwapList s1, s2;
  for (int r = 1; r <= rings; ++r) {
    s1.emplace_back(vlabel("a", r), vlabel("b", r));
    s1.emplace_back(vlabel("c", r), vlabel("d", r));
    s2.emplace_back(vlabel("a", r), vlabel("d", r));
    s2.emplace_back(vlabel("b", r), vlabel("c", r));
  }
  return make_instance(labels, edges, s1, s2, 2);
}

Instance make_k23_d3() {
  std::vector<std::string> labels = {"x", "y", "a", "b", "c"};
  EdgeList edges = {{"x", "a"}, {"x", "b"}, {"x", "c"}, {"y", "a"}, {"y", "b"}, {"y", "c"}};
  return make_instance(labels, edges, {{"x", "y"}, {"a", "b"}}, {{"x", "y"}, {"a", "c"}}, 3);
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"k44", "fig1-d3", "fig1-d4", "octahedron", "wheel", "squareweb", "k23-d3"};
}

Instance gallery(const std::string& name, int param) {
  if (name == "k44") return make_k44();
  if (name == "fig1-d3") return make_fig1_d3();
  if (name == "fig1-d4") return make_fig1_d4();
  if (name == "octahedron") return make_octahedron();
  if (name == "wheel") return make_wheel(param > 0 ? param : 4);
  if (name == "squareweb") return make_squareweb(param > 0 ? param : 3);
  if (name == "k23-d3") return make_k23_d3();
  throw std::invalid_argument("gallery: unknown instance name '" + name + "'");
}

}  // namespace crit
