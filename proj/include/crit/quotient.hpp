#pragma once

#include "crit/action.hpp"
#include "crit/graph.hpp"

namespace crit {

enum class Subgroup { Sigma1, Sigma2, Tau, Full, Trivial };

/// Galois quotient morphism G -> G/H with fibers and horizontal
/// multiplicities.  Edge map is undefined (-1) exactly on edges whose
/// endpoints merge in the quotient.
struct GraphMorphism {
  Multigraph source;
  Multigraph target;
  std::vector<int> vertex_map;             // source vertex -> target vertex
  std::vector<int> edge_map;               // source edge -> target edge or -1
  std::vector<std::vector<int>> fibers;    // target vertex -> source vertices
  std::vector<int> h_mult;                 // target vertex -> |H| / |fiber|
  int subgroup_order = 1;
};

/// Elements of the requested subgroup of the cached D_n element table.
std::vector<GroupElement> subgroup(const DihedralAction& a, Subgroup which);

GraphMorphism quotient_graph(const Multigraph& g, const DihedralAction& a, Subgroup which);

/// phi^*(delta)(v) = m_phi(phi(v)) * delta(phi(v)).
Divisor pullback(const GraphMorphism& phi, const Divisor& delta);

/// Pullback of the firing divisor of a target vertex.
Divisor pullback_firing(const GraphMorphism& phi, int target_vertex);

/// The three index-2..n quotients and the full quotient used throughout the
/// decomposition: H1 = G/<s1>, H2 = G/<s2>, H3 = G/<tau>, Ghat = G/D_n.
struct QuotientSet {
  GraphMorphism h1, h2, h3, ghat;
};

QuotientSet make_quotients(const Multigraph& g, const DihedralAction& a);

}  // namespace crit
