#include "crit/lattice.hpp"

#include <stdexcept>

namespace crit {

namespace {

Divisor row_to_divisor(const IntMat& m, int i) {
  Divisor d(m.cols());
  for (int j = 0; j < m.cols(); ++j) d[j] = m(i, j);
  return d;
}

IntMat rows_to_matrix(int ambient, const std::vector<Divisor>& rows) {
  IntMat m(int(rows.size()), ambient);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient)
      throw std::invalid_argument("DivisorLattice: divisor size mismatch");
    for (int j = 0; j < ambient; ++j) m(int(i), j) = rows[i][j];
  }
  return m;
}

}  // namespace

DivisorLattice DivisorLattice::from_matrix(IntMat gens) {
  DivisorLattice lat;
  lat.ambient = gens.cols();
  lat.gens = gens;
  HnfResult h = hnf(gens);
  lat.basis = IntMat(h.rank, lat.ambient);
  for (int i = 0; i < h.rank; ++i)
    for (int j = 0; j < lat.ambient; ++j) lat.basis(i, j) = h.h(i, j);
  lat.pivots = h.pivot_cols;
  return lat;
}

DivisorLattice DivisorLattice::from_rows(int ambient, const std::vector<Divisor>& rows) {
  return from_matrix(rows_to_matrix(ambient, rows));
}

std::optional<std::vector<Int>> DivisorLattice::coords(const Divisor& d) const {
  if (d.size() != ambient) throw std::invalid_argument("DivisorLattice: ambient mismatch");
  std::vector<Int> r = d.v;
  std::vector<Int> x(static_cast<size_t>(rank()));
  for (int i = 0; i < rank(); ++i) {
    int p = pivots[size_t(i)];
    const Int& piv = basis(i, p);
    // rows below i are zero at column p, rows above were already consumed
    if (r[size_t(p)] % piv != 0) return std::nullopt;
    Int q = r[size_t(p)] / piv;
    x[size_t(i)] = q;
    if (q != 0)
      for (int j = p; j < ambient; ++j) r[size_t(j)] -= q * basis(i, j);
  }
  for (const Int& v : r)
    if (v != 0) return std::nullopt;
  return x;
}

bool DivisorLattice::member(const Divisor& d) const { return coords(d).has_value(); }

bool DivisorLattice::contains(const DivisorLattice& other) const {
  for (int i = 0; i < other.rank(); ++i)
    if (!member(row_to_divisor(other.basis, i))) return false;
  return true;
}

bool DivisorLattice::same_lattice(const DivisorLattice& other) const {
  // HNF bases are canonical per lattice
  return basis == other.basis;
}

DivisorLattice lattice_sum(const DivisorLattice& a, const DivisorLattice& b) {
  return DivisorLattice::from_matrix(IntMat::vstack(a.basis, b.basis));
}

DivisorLattice lattice_intersection(const DivisorLattice& a, const DivisorLattice& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("lattice_intersection: ambient mismatch");
  // z = (x, -y) in the left kernel of [A; B] means x*A = y*B
  IntMat stacked = IntMat::vstack(a.basis, b.basis);
  IntMat k = left_kernel(stacked);
  IntMat out(k.rows(), a.ambient);
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < a.ambient; ++j) {
      Int s = 0;
      for (int t = 0; t < a.rank(); ++t) s += k(i, t) * a.basis(t, j);
      out(i, j) = s;
    }
  DivisorLattice lat = DivisorLattice::from_matrix(out);
  lat.ambient = a.ambient;
  return lat;
}

LatticeQuotient lattice_quotient(const DivisorLattice& sub, const DivisorLattice& sup) {
  if (sub.ambient != sup.ambient) throw std::invalid_argument("lattice_quotient: ambient mismatch");
  IntMat c(sub.rank(), sup.rank());
  for (int i = 0; i < sub.rank(); ++i) {
    auto x = sup.coords(row_to_divisor(sub.basis, i));
    if (!x) throw std::invalid_argument("lattice_quotient: sub is not contained in sup");
    for (int j = 0; j < sup.rank(); ++j) c(i, j) = (*x)[size_t(j)];
  }
  std::vector<Int> diag = snf(c);
  LatticeQuotient q;
  q.free_rank_defect = sup.rank() - int(diag.size());
  q.torsion = group_from_snf(diag);
  return q;
}

Int lattice_index(const DivisorLattice& sub, const DivisorLattice& sup) {
  LatticeQuotient q = lattice_quotient(sub, sup);
  if (q.free_rank_defect != 0)
    throw std::invalid_argument("lattice_index: infinite index (rank drop)");
  return q.torsion.order();
}

Int F_orbit(const OrbitInfo& o, const Divisor& d) {
  Int f = 0;
  int m = int(o.main.size());
  switch (o.type) {
    case OrbitType::I:
      for (int i = 1; i <= m; ++i) f += Int(2 * i) * d[o.main[size_t(i - 1)]];
      break;
    case OrbitType::II:
      for (int i = 1; i <= m; ++i) f += Int(2 * i + 1) * d[o.main[size_t(i - 1)]];
      break;
    case OrbitType::III:
      for (int i = 1; i <= m; ++i)
        f += Int(2 * i) * (d[o.main[size_t(i - 1)]] + d[o.other[size_t(i - 1)]]);
      break;
  }
  return f;
}

Int F_total(const ActionSummary& s, const Divisor& d) {
  Int f = 0;
  for (const OrbitInfo& o : s.orbits) f += F_orbit(o, d);
  return f;
}

Int A_orbit(const OrbitInfo& o, const Divisor& d) {
  Int a = 0;
  if (o.type == OrbitType::III) {
    for (int v : o.main) a += d[v];
    for (int v : o.other) a -= d[v];
  } else {
    for (int v : o.vertices) a += d[v];
  }
  return a;
}

Divisor orbit_indicator(const Multigraph& g, const OrbitInfo& o) {
  Divisor d(g.num_vertices());
  Int val = o.type == OrbitType::III ? 1 : 2;
  for (int v : o.vertices) d[v] = val;
  return d;
}

DivisorLattice build_D(const Multigraph& g) {
  int nv = g.num_vertices();
  std::vector<Divisor> rows;
  for (int v = 1; v < nv; ++v) {
    Divisor d(nv);
    d[v] = 1;
    d[0] = -1;
    rows.push_back(d);
  }
  return DivisorLattice::from_rows(nv, rows);
}

DivisorLattice build_L(const Multigraph& g) {
  std::vector<Divisor> rows;
  for (int v = 0; v < g.num_vertices(); ++v) rows.push_back(firing_divisor(g, v));
  return DivisorLattice::from_rows(g.num_vertices(), rows);
}

namespace {

void append_pullback_firings(const GraphMorphism& phi, std::vector<Divisor>& rows) {
  for (int w = 0; w < phi.target.num_vertices(); ++w) rows.push_back(pullback_firing(phi, w));
}

void append_pullback_degree_zero(const GraphMorphism& phi, std::vector<Divisor>& rows) {
  int nw = phi.target.num_vertices();
  for (int w = 1; w < nw; ++w) {
    Divisor d(nw);
    d[w] = 1;
    d[0] = -1;
    rows.push_back(pullback(phi, d));
  }
}

}  // namespace

DivisorLattice build_Lprime(const Multigraph& g, const QuotientSet& quo) {
  std::vector<Divisor> rows;
  append_pullback_firings(quo.h1, rows);
  append_pullback_firings(quo.h2, rows);
  append_pullback_firings(quo.h3, rows);
  return DivisorLattice::from_rows(g.num_vertices(), rows);
}

DivisorLattice build_Pi(const Multigraph& g, const QuotientSet& quo, int i) {
  const GraphMorphism* phi = nullptr;
  switch (i) {
    case 0: phi = &quo.ghat; break;
    case 1: phi = &quo.h1; break;
    case 2: phi = &quo.h2; break;
    case 3: phi = &quo.h3; break;
    default: throw std::invalid_argument("build_Pi: index out of range");
  }
  std::vector<Divisor> rows;
  append_pullback_degree_zero(*phi, rows);
  return DivisorLattice::from_rows(g.num_vertices(), rows);
}

DivisorLattice build_Q(const Multigraph& g, const ActionSummary& s) {
  std::vector<Divisor> rows;
  for (const OrbitInfo& o : s.orbits) rows.push_back(orbit_indicator(g, o));
  return DivisorLattice::from_rows(g.num_vertices(), rows);
}

LatticeSystem make_system(const Multigraph& g, const DihedralAction& a) {
  return make_system(g, classify_orbits(g, a));
}

LatticeSystem make_system(const Multigraph& g, const ActionSummary& s) {
  LatticeSystem sys;
  sys.g = g;
  sys.sum = s;
  sys.quo = make_quotients(g, s.action);

  sys.D = build_D(g);
  sys.L = build_L(g);
  sys.Lp = build_Lprime(g, sys.quo);
  sys.P0 = build_Pi(g, sys.quo, 0);
  sys.P1 = build_Pi(g, sys.quo, 1);
  sys.P2 = build_Pi(g, sys.quo, 2);
  sys.P3 = build_Pi(g, sys.quo, 3);
  sys.P12 = lattice_sum(sys.P1, sys.P2);
  sys.P = lattice_sum(sys.P12, sys.P3);
  sys.Q = build_Q(g, s);

  // gamma: a fixed divisor in Q of the minimal positive degree 2n/kappa,
  // found by running the extended gcd over the orbit indicator degrees
  int n = s.action.n;
  sys.two_n_over_kappa = Int(2 * n) / s.kappa;
  size_t norb = s.orbits.size();
  sys.gamma_coeffs.assign(norb, Int(0));
  int exact = -1;  // an orbit whose index already equals kappa, if any
  for (size_t i = 0; i < norb; ++i)
    if (s.orbits[i].index == s.kappa) { exact = int(i); break; }
  if (exact >= 0) {
    sys.gamma_coeffs[size_t(exact)] = 1;
  } else {
    Int g_acc = 0;
    for (size_t i = 0; i < norb; ++i) {
      Int d_i = Int(2 * n) / s.orbits[i].index;
      if (i == 0) {
        g_acc = d_i;
        sys.gamma_coeffs[0] = 1;
        continue;
      }
      Int g_new, u, v;
      mpz_gcdext(g_new.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g_acc.get_mpz_t(),
                 d_i.get_mpz_t());
      for (size_t j = 0; j < i; ++j) sys.gamma_coeffs[j] *= u;
      sys.gamma_coeffs[i] = v;
      g_acc = g_new;
    }
    if (g_acc != sys.two_n_over_kappa)
      throw std::logic_error("make_system: indicator degrees do not generate 2n/kappa");
  }
  sys.gamma = Divisor(g.num_vertices());
  for (size_t i = 0; i < norb; ++i)
    if (sys.gamma_coeffs[i] != 0)
      sys.gamma += sys.gamma_coeffs[i] * orbit_indicator(g, s.orbits[i]);
  if (sys.gamma.degree() != sys.two_n_over_kappa)
    throw std::logic_error("make_system: gamma has wrong degree");
  return sys;
}

Divisor LatticeSystem::gamma_orbit(int orbit_index) const {
  const OrbitInfo& o = sum.orbits[size_t(orbit_index)];
  Divisor d = orbit_indicator(g, o) - (Int(sum.kappa) / o.index) * gamma;
  if (d.degree() != 0) throw std::logic_error("gamma_orbit: nonzero degree");
  return d;
}

bool LatticeSystem::in_P12_criterion(const Divisor& d) const {
  if (d.size() != g.num_vertices()) throw std::invalid_argument("in_P12_criterion: size mismatch");
  if (d.degree() != 0) return false;
  for (const OrbitInfo& o : sum.orbits) {
    Int s = 0;
    for (int v : o.vertices) s += d[v];
    if (s % 2 != 0) return false;
    if (o.type == OrbitType::III && A_orbit(o, d) != 0) return false;
  }
  return F_total(sum, d) % two_n_over_kappa == 0;
}

std::pair<Divisor, Divisor> LatticeSystem::split_P12(const Divisor& d) const {
  if (!in_P12_criterion(d)) throw std::invalid_argument("split_P12: divisor fails the criterion");
  int nv = g.num_vertices();
  Divisor d1(nv), d2(nv);
  for (const OrbitInfo& o : sum.orbits) {
    int m = int(o.main.size());
    auto at = [&](const std::vector<int>& slot, int i) -> const Int& {
      return d[slot[size_t(i - 1)]];  // 1-based
    };
    if (o.type == OrbitType::III) {
      std::vector<Int> h1(static_cast<size_t>(m)), h2(static_cast<size_t>(m));  // values on x_i
      for (int i = 1; i <= m; ++i) {
        Int a = 0, b = 0;
        for (int j = 1; j <= i; ++j) a += at(o.main, j);
        for (int j = m + 2 - i; j <= m; ++j) b += at(o.other, j);
        h1[size_t(i - 1)] = a - b;
        h2[size_t(i - 1)] = b - (a - at(o.main, i));
      }
      for (int i = 1; i <= m; ++i) {
        d1[o.main[size_t(i - 1)]] = h1[size_t(i - 1)];
        d2[o.main[size_t(i - 1)]] = h2[size_t(i - 1)];
        d1[o.other[size_t(i - 1)]] = h1[size_t(m - i)];            // x_{m+1-i}
        d2[o.other[size_t(i - 1)]] = h2[size_t((m + 1 - i) % m)];  // x_{m+2-i}, wrapped
      }
    } else if (o.type == OrbitType::I) {
      for (int i = 1; i <= m; ++i) {
        Int a = 0, b = 0;
        for (int j = 1; j <= i; ++j) a += at(o.main, j);
        for (int j = m + 2 - i; j <= m; ++j) b += at(o.main, j);
        d1[o.main[size_t(i - 1)]] = a - b;
        d2[o.main[size_t(i - 1)]] = b - (a - at(o.main, i));
      }
    } else {  // Type II
      for (int i = 1; i <= m; ++i) {
        Int a = 0, b = 0;
        for (int j = 1; j <= i; ++j) a += at(o.main, j);
        for (int j = m + 1 - i; j <= m - 1; ++j) b += at(o.main, j);
        d1[o.main[size_t(i - 1)]] = a - b;
        d2[o.main[size_t(i - 1)]] = b - (a - at(o.main, i));
      }
      // the folding fixes w_{m/2} and w_m, where the first part must be
      // even; both fixed values share the parity of d(w_m), so an odd value
      // is repaired by moving the constant-1 divisor on this orbit to the
      // second part (constant divisors are symmetric for both generators,
      // and the second generator acts freely here)
      if (at(o.main, m) % 2 != 0) {
        for (int v : o.vertices) {
          d1[v] -= 1;
          d2[v] += 1;
        }
      }
    }
  }
  // rebalance the degrees through Q without changing the sum
  Int excess = d1.degree();
  if (excess % two_n_over_kappa != 0)
    throw std::logic_error("split_P12: hat-divisor degree not a multiple of 2n/kappa");
  Divisor shift = (excess / two_n_over_kappa) * gamma;
  d1 -= shift;
  d2 += shift;
  if (!(d1 + d2 == d)) throw std::logic_error("split_P12: parts do not sum to input");
  if (!P1.member(d1)) throw std::logic_error("split_P12: first part not in P1");
  if (!P2.member(d2)) throw std::logic_error("split_P12: second part not in P2");
  return {d1, d2};
}

bool LatticeSystem::in_P_criterion(const Divisor& d) const {
  if (d.size() != g.num_vertices()) throw std::invalid_argument("in_P_criterion: size mismatch");
  if (d.degree() != 0) return false;
  int n = sum.action.n;
  for (const OrbitInfo& o : sum.orbits) {
    if (o.type == OrbitType::III) {
      if (A_orbit(o, d) % n != 0) return false;
    } else if (sum.parity != ParityCase::NOdd) {
      Int s = 0;
      for (int v : o.vertices) s += d[v];
      if (s % 2 != 0) return false;
    }
  }
  Int modulus = sum.parity == ParityCase::NEvenKappaEven ? two_n_over_kappa
                                                         : Int(n) / sum.kappa;
  return F_total(sum, d) % modulus == 0;
}

std::pair<Divisor, Divisor> LatticeSystem::split_P(const Divisor& d) const {
  if (!in_P_criterion(d)) throw std::invalid_argument("split_P: divisor fails the criterion");
  int n = sum.action.n;
  int nv = g.num_vertices();

  // per-orbit twist of each Type III orbit, and their total
  std::vector<Int> a(sum.orbits.size(), Int(0));
  Int alpha = 0;
  int omega = -1;  // designated Type I orbit
  int theta = -1;  // designated Type II orbit
  int omega3 = -1; // fallback designated Type III orbit
  for (size_t i = 0; i < sum.orbits.size(); ++i) {
    const OrbitInfo& o = sum.orbits[i];
    if (o.type == OrbitType::III) {
      a[i] = A_orbit(o, d) / n;
      alpha += a[i];
      if (omega3 < 0) omega3 = int(i);
    } else if (o.type == OrbitType::I && omega < 0) {
      omega = int(i);
    } else if (o.type == OrbitType::II && theta < 0) {
      theta = int(i);
    }
  }

  Divisor d3(nv);
  auto fill_constant = [&](const std::vector<int>& verts, const Int& val) {
    for (int v : verts) d3[v] = val;
  };

  // base assignment: k_O * a_O on every x-suborbit
  for (size_t i = 0; i < sum.orbits.size(); ++i)
    if (sum.orbits[i].type == OrbitType::III)
      fill_constant(sum.orbits[i].main, Int(sum.orbits[i].index) * a[i]);

  bool f_needs_shift = sum.parity == ParityCase::NEvenKappaOdd &&
                       F_total(sum, d) % two_n_over_kappa != 0;

  if (f_needs_shift) {
    // F(d) = n/kappa mod 2n/kappa: absorb the residue through a Type II orbit
    if (theta < 0 || omega < 0)
      throw std::logic_error("split_P: criterion holds but required inertial orbits are missing");
    fill_constant(sum.orbits[size_t(theta)].vertices, Int(sum.orbits[size_t(theta)].index));
    fill_constant(sum.orbits[size_t(omega)].vertices,
                  Int(-sum.orbits[size_t(omega)].index) * (alpha + 1));
  } else if (omega >= 0) {
    if (sum.parity == ParityCase::NOdd) {
      // odd orbit sums on other Type I orbits are fixed pointwise by k_O
      Int odd_others = 0;
      for (size_t i = 0; i < sum.orbits.size(); ++i) {
        if (int(i) == omega || sum.orbits[i].type != OrbitType::I) continue;
        Int s = 0;
        for (int v : sum.orbits[i].vertices) s += d[v];
        if (s % 2 != 0) {
          fill_constant(sum.orbits[i].vertices, Int(sum.orbits[i].index));
          ++odd_others;
        }
      }
      fill_constant(sum.orbits[size_t(omega)].vertices,
                    Int(-sum.orbits[size_t(omega)].index) * (alpha + odd_others));
    } else {
      fill_constant(sum.orbits[size_t(omega)].vertices,
                    Int(-sum.orbits[size_t(omega)].index) * alpha);
    }
  } else {
    // no inertial orbit available: balance within a designated Type III orbit
    if (omega3 < 0) throw std::logic_error("split_P: no orbits");
    if (alpha % 2 != 0)
      throw std::domain_error(
          "split_P: no constructive split available (all orbits Type III with odd total twist)");
    const OrbitInfo& om = sum.orbits[size_t(omega3)];
    fill_constant(om.main, Int(om.index) * (a[size_t(omega3)] - alpha / 2));
    fill_constant(om.other, Int(-om.index) * (alpha / 2));
  }

  if (d3.degree() != 0) throw std::logic_error("split_P: correction term has nonzero degree");
  if (!P3.member(d3)) throw std::logic_error("split_P: correction term not in P3");
  Divisor d12 = d - d3;
  if (!in_P12_criterion(d12))
    throw std::logic_error("split_P: remainder fails the P1+P2 criterion");
  return {d12, d3};
}

}  // namespace crit
