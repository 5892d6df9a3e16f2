#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crit/abelian.hpp"
#include "crit/intmat.hpp"

namespace crit {

/// Degree-0..whatever integer chip assignment on the vertices of a host
/// graph.  Plain value type; host association is by vertex count only.
struct Divisor {
  std::vector<Int> v;

  Divisor() = default;
  explicit Divisor(int nvert) : v(size_t(nvert)) {}

  int size() const { return int(v.size()); }
  Int& operator[](int i) { return v[size_t(i)]; }
  const Int& operator[](int i) const { return v[size_t(i)]; }

  Int degree() const {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
  }

  Divisor& operator+=(const Divisor& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(const Int& c, Divisor a) {
    for (Int& x : a.v) x *= c;
    return a;
  }
  bool operator==(const Divisor& o) const { return v == o.v; }
  bool is_zero() const {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
};

/// Finite connected multigraph.  Edges carry identities (dense ids equal to
/// their position); parallel edges are distinct first-class objects.  Loops
/// are rejected at construction.
struct Multigraph {
  std::vector<std::string> labels;            // dense vertex index -> label
  std::vector<std::pair<int, int>> edges;     // edge id -> endpoint indices

  int num_vertices() const { return int(labels.size()); }
  int num_edges() const { return int(edges.size()); }

  int degree(int v) const;
  // number of edges between u and w (u != w)
  int edge_count(int u, int w) const;
  int vertex_index(const std::string& label) const;  // -1 if absent
  bool connected() const;
};

/// Validates and builds: distinct labels, known endpoints, no loops,
/// connected.  Dense indices follow input order.
Multigraph build_graph(const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edge_pairs);

/// The divisor of firing at v: -deg(v) at v, +multiplicity at neighbors.
Divisor firing_divisor(const Multigraph& g, int v);

IntMat laplacian(const Multigraph& g);
IntMat reduced_laplacian(const Multigraph& g, int q);

/// Invariant factors of the reduced Laplacian with 1s dropped; the critical
/// group D/L of the graph.
AbelianGroup jacobian(const Multigraph& g);

}  // namespace crit
