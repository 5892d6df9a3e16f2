#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crit/graph.hpp"

namespace crit {

/// Permutation of {0..n-1}.
struct Perm {
  std::vector<int> map;

  Perm() = default;
  explicit Perm(int n) : map(size_t(n)) {
    for (int i = 0; i < n; ++i) map[size_t(i)] = i;
  }
  explicit Perm(std::vector<int> m) : map(std::move(m)) {}

  int size() const { return int(map.size()); }
  int operator()(int i) const { return map[size_t(i)]; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (map[size_t(i)] != i) return false;
    return true;
  }
  bool is_bijection() const;

  // (a * b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (int i = 0; i < a.size(); ++i) c.map[size_t(i)] = a(b(i));
    return c;
  }
  Perm inverse() const {
    Perm c(size());
    for (int i = 0; i < size(); ++i) c.map[size_t(map[size_t(i)])] = i;
    return c;
  }
  int order() const;
  bool operator==(const Perm& o) const { return map == o.map; }
};

/// One group generator acting simultaneously on vertices and edges.
struct GeneratorPerm {
  Perm vertex;
  Perm edge;
};

/// A single dihedral group element with its vertex and edge action.
struct GroupElement {
  std::string word;  // e.g. "t^2", "s1*t"
  Perm vertex;
  Perm edge;
};

/// Validated harmonic-candidate D_n action: two involutions with tau of
/// order exactly n, all 2n elements enumerated and cached.
struct DihedralAction {
  int n = 0;
  GeneratorPerm sigma1, sigma2;
  bool swapped = false;  // set when classify_orbits exchanged the generators
  std::vector<GroupElement> elements;  // tau^j then sigma1*tau^j, j = 0..n-1

  const GroupElement& tau() const { return elements[n > 1 ? 1 : 0]; }
};

enum class OrbitType { I, II, III };

struct OrbitInfo {
  std::vector<int> vertices;  // sorted
  OrbitType type = OrbitType::I;
  int index = 0;  // k = n/|O| (inertial) or 2n/|O| (Type III)
  // canonical labeling of Remark-style suborbits; inertial orbits fill
  // `main` (z_i or w_i), Type III fills `main` (x_i) and `other` (y_i)
  std::vector<int> main;
  std::vector<int> other;
};

enum class ParityCase { NOdd, NEvenKappaOdd, NEvenKappaEven };

struct ActionSummary {
  DihedralAction action;  // normalized (possibly swapped) action
  std::vector<OrbitInfo> orbits;
  int t1 = 0, t2 = 0, t3 = 0;
  int kappa = 1;
  int t_tilde = 0;  // max(t1-1,0) + max(t2-1,0)
  ParityCase parity = ParityCase::NOdd;

  int orbit_of(int v) const;  // orbit index containing vertex v
};

/// Witness for a harmonicity failure: group element g fixes edge e without
/// swapping its endpoints.
struct HarmonicWitness {
  std::string element;
  int edge = -1;
};

/// Checks the group relations on vertices AND edges, enumerates the 2n
/// elements, rejects non-faithful actions.  n = 1 is rejected.
DihedralAction validate_action(const Multigraph& g, const GeneratorPerm& sigma1,
                               const GeneratorPerm& sigma2, int n);

/// The unique edge permutation compatible with a vertex automorphism of a
/// simple graph.  Throws if g has parallel edges or the map is not an
/// automorphism.
Perm derive_edge_perm(const Multigraph& g, const Perm& vertex_perm);

/// True iff every group element that fixes an edge swaps its endpoints.
bool is_harmonic(const Multigraph& g, const DihedralAction& a,
                 HarmonicWitness* witness = nullptr);

/// Orbit computation, typing, indexing, canonical labeling and generator
/// normalization (sigma1/sigma2 swapped when t2 > 0 but t1 = 0).
ActionSummary classify_orbits(const Multigraph& g, const DihedralAction& a);

/// Canonical labeling of one typed orbit; also verifies the symmetry
/// identities and throws on internal inconsistency.
void canonical_labeling(const Multigraph& g, const DihedralAction& a, OrbitInfo& orbit);

std::string orbit_type_name(OrbitType t);

}  // namespace crit
