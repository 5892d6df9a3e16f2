#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crit/abelian.hpp"
#include "crit/action.hpp"
#include "crit/graph.hpp"
#include "crit/quotient.hpp"

namespace crit {

/// Integer span of divisor generators over the vertex set of a host graph.
/// The HNF basis is computed once at construction and all queries go
/// through it.
struct DivisorLattice {
  int ambient = 0;
  IntMat gens;                // generator rows
  IntMat basis;               // HNF rows, exactly rank() of them
  std::vector<int> pivots;    // pivot column per basis row

  static DivisorLattice from_rows(int ambient, const std::vector<Divisor>& rows);
  static DivisorLattice from_matrix(IntMat gens);

  int rank() const { return basis.rows(); }
  bool member(const Divisor& d) const;
  // x with x * basis = d, when it exists
  std::optional<std::vector<Int>> coords(const Divisor& d) const;
  bool contains(const DivisorLattice& other) const;
  bool same_lattice(const DivisorLattice& other) const;
};

DivisorLattice lattice_sum(const DivisorLattice& a, const DivisorLattice& b);
DivisorLattice lattice_intersection(const DivisorLattice& a, const DivisorLattice& b);

struct LatticeQuotient {
  int free_rank_defect = 0;
  AbelianGroup torsion;
};

/// The group sup/sub; requires sub to be contained in sup.
LatticeQuotient lattice_quotient(const DivisorLattice& sub, const DivisorLattice& sup);

Int lattice_index(const DivisorLattice& sub, const DivisorLattice& sup);  // |sup/sub|

// orbit functionals of the decomposition
Int F_orbit(const OrbitInfo& o, const Divisor& d);
Int F_total(const ActionSummary& s, const Divisor& d);
// inertial: sum over the orbit; Type III: sum over x minus sum over y
Int A_orbit(const OrbitInfo& o, const Divisor& d);

/// The indicator divisor of an orbit: 1 on Type III orbits, 2 on inertial
/// ones, 0 elsewhere.
Divisor orbit_indicator(const Multigraph& g, const OrbitInfo& o);

/// All divisor lattices of the decomposition for one harmonic action, plus
/// the fixed degree-(2n/kappa) divisor gamma in Q.
struct LatticeSystem {
  Multigraph g;
  ActionSummary sum;
  QuotientSet quo;

  DivisorLattice D;    // degree-zero divisors
  DivisorLattice L;    // firing divisors
  DivisorLattice Lp;   // pullbacks of quotient firing divisors
  DivisorLattice P0, P1, P2, P3;
  DivisorLattice P12;  // P1 + P2
  DivisorLattice P;    // P1 + P2 + P3
  DivisorLattice Q;

  Divisor gamma;
  std::vector<Int> gamma_coeffs;  // s_O with sum s_O * deg(delta_O) = 2n/kappa
  Int two_n_over_kappa;

  int n() const { return sum.action.n; }

  bool in_P12_criterion(const Divisor& d) const;
  // constructive split of a P1+P2 member into (d1 in P1, d2 in P2)
  std::pair<Divisor, Divisor> split_P12(const Divisor& d) const;

  bool in_P_criterion(const Divisor& d) const;
  // constructive split into (d12 in P1+P2, d3 in P3)
  std::pair<Divisor, Divisor> split_P(const Divisor& d) const;

  // delta_O - (kappa/k_O) * gamma: degree zero, in P1 ∩ P2, k_O-torsion mod P0
  Divisor gamma_orbit(int orbit_index) const;
};

LatticeSystem make_system(const Multigraph& g, const DihedralAction& a);
LatticeSystem make_system(const Multigraph& g, const ActionSummary& s);

// standalone builders matching the system's members
DivisorLattice build_D(const Multigraph& g);
DivisorLattice build_L(const Multigraph& g);
DivisorLattice build_Lprime(const Multigraph& g, const QuotientSet& quo);
DivisorLattice build_Pi(const Multigraph& g, const QuotientSet& quo, int i);  // i in 0..3
DivisorLattice build_Q(const Multigraph& g, const ActionSummary& s);

}  // namespace crit
