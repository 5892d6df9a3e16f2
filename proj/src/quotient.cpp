#include "crit/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace crit {

std::vector<GroupElement> subgroup(const DihedralAction& a, Subgroup which) {
  switch (which) {
    case Subgroup::Trivial:
      return {a.elements[0]};
    case Subgroup::Sigma1:
      return {a.elements[0], a.elements[size_t(a.n)]};
    case Subgroup::Sigma2:
      // sigma2 = sigma1 * tau, the reflection at rotation offset 1
      return {a.elements[0], a.elements[size_t(a.n + 1)]};
    case Subgroup::Tau:
      return std::vector<GroupElement>(a.elements.begin(), a.elements.begin() + a.n);
    case Subgroup::Full:
      return a.elements;
  }
  throw std::logic_error("subgroup: unreachable");
}

GraphMorphism quotient_graph(const Multigraph& g, const DihedralAction& a, Subgroup which) {
  std::vector<GroupElement> h = subgroup(a, which);
  GraphMorphism phi;
  phi.source = g;
  phi.subgroup_order = int(h.size());

  // vertex orbits under H, in order of smallest member
  int nv = g.num_vertices();
  phi.vertex_map.assign(size_t(nv), -1);
  for (int v = 0; v < nv; ++v) {
    if (phi.vertex_map[size_t(v)] >= 0) continue;
    std::set<int> orb;
    for (const auto& el : h) orb.insert(el.vertex(v));
    int id = phi.target.num_vertices();
    std::string label = "{";
    bool first = true;
    for (int w : orb) {
      phi.vertex_map[size_t(w)] = id;
      label += (first ? "" : ",") + g.labels[size_t(w)];
      first = false;
    }
    label += "}";
    phi.target.labels.push_back(label);
    phi.fibers.push_back(std::vector<int>(orb.begin(), orb.end()));
  }

  // edge orbits under H; orbits whose endpoints merge are loop images and
  // are discarded
  phi.edge_map.assign(size_t(g.num_edges()), -2);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (phi.edge_map[size_t(e)] != -2) continue;
    std::set<int> orb;
    for (const auto& el : h) orb.insert(el.edge(e));
    auto [u, v] = g.edges[size_t(e)];
    int tu = phi.vertex_map[size_t(u)], tv = phi.vertex_map[size_t(v)];
    if (tu == tv) {
      for (int f : orb) phi.edge_map[size_t(f)] = -1;
      continue;
    }
    int id = phi.target.num_edges();
    phi.target.edges.emplace_back(tu, tv);
    for (int f : orb) phi.edge_map[size_t(f)] = id;
  }

  for (size_t w = 0; w < phi.fibers.size(); ++w) {
    if (phi.subgroup_order % int(phi.fibers[w].size()) != 0)
      throw std::logic_error("quotient_graph: fiber size does not divide |H|");
    phi.h_mult.push_back(phi.subgroup_order / int(phi.fibers[w].size()));
  }

  // definitional horizontal multiplicity check: every target edge at w has
  // exactly h_mult(w) preimages at each source vertex in the fiber
  std::vector<std::map<int, int>> incident(static_cast<size_t>(nv));  // source v -> target edge -> count
  for (int e = 0; e < g.num_edges(); ++e) {
    int te = phi.edge_map[size_t(e)];
    if (te < 0) continue;
    auto [x, y] = g.edges[size_t(e)];
    ++incident[size_t(x)][te];
    ++incident[size_t(y)][te];
  }
  for (int w = 0; w < phi.target.num_vertices(); ++w) {
    std::vector<int> at_w;
    for (int te = 0; te < phi.target.num_edges(); ++te) {
      auto [ta, tb] = phi.target.edges[size_t(te)];
      if (ta == w || tb == w) at_w.push_back(te);
    }
    for (int v : phi.fibers[size_t(w)])
      for (int te : at_w) {
        auto it = incident[size_t(v)].find(te);
        int count = it == incident[size_t(v)].end() ? 0 : it->second;
        if (count != phi.h_mult[size_t(w)])
          throw std::logic_error(
              "quotient_graph: horizontal multiplicity mismatch (non-harmonic action?)");
      }
  }

  if (!phi.target.connected()) throw std::logic_error("quotient_graph: disconnected quotient");
  return phi;
}

Divisor pullback(const GraphMorphism& phi, const Divisor& delta) {
  if (delta.size() != phi.target.num_vertices())
    throw std::invalid_argument("pullback: divisor not on target");
  Divisor out(phi.source.num_vertices());
  for (int v = 0; v < phi.source.num_vertices(); ++v) {
    int w = phi.vertex_map[size_t(v)];
    out[v] = Int(phi.h_mult[size_t(w)]) * delta[w];
  }
  return out;
}

Divisor pullback_firing(const GraphMorphism& phi, int target_vertex) {
  return pullback(phi, firing_divisor(phi.target, target_vertex));
}

QuotientSet make_quotients(const Multigraph& g, const DihedralAction& a) {
  return {quotient_graph(g, a, Subgroup::Sigma1), quotient_graph(g, a, Subgroup::Sigma2),
          quotient_graph(g, a, Subgroup::Tau), quotient_graph(g, a, Subgroup::Full)};
}

}  // namespace crit
