#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crit/gallery.hpp"
#include "crit/lattice.hpp"
#include "crit/randgen.hpp"

using namespace crit;

namespace {

Divisor random_combination(const DivisorLattice& lat, std::mt19937_64& rng, int spread = 3) {
  std::uniform_int_distribution<int> c(-spread, spread);
  Divisor d(lat.ambient);
  for (int i = 0; i < lat.gens.rows(); ++i) {
    Int coef = c(rng);
    for (int j = 0; j < lat.ambient; ++j) d[j] += coef * lat.gens(i, j);
  }
  return d;
}

Divisor random_deg0(int nv, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  Divisor d(nv);
  for (int i = 0; i + 1 < nv; ++i) {
    d[i] = c(rng);
    d[nv - 1] -= d[i];
  }
  return d;
}

}  // namespace

TEST_CASE("lattice membership, coords, sum and intersection") {
  std::mt19937_64 rng(31);
  Instance inst = gallery("k44");
  LatticeSystem sys = make_system(inst.graph, inst.action);

  CHECK(sys.D.rank() == inst.graph.num_vertices() - 1);
  CHECK(sys.D.contains(sys.L));
  CHECK(sys.L.contains(sys.Lp));
  CHECK(sys.D.contains(sys.P));
  CHECK(sys.P.contains(sys.P12));
  CHECK(sys.P12.contains(sys.P0));
  CHECK(sys.P.contains(sys.P3));

  for (int t = 0; t < 50; ++t) {
    Divisor d = random_combination(sys.P, rng);
    CHECK(sys.P.member(d));
    auto x = sys.P.coords(d);
    REQUIRE(x.has_value());
    Divisor back(sys.P.ambient);
    for (int i = 0; i < sys.P.basis.rows(); ++i)
      for (int j = 0; j < sys.P.ambient; ++j) back[j] += (*x)[size_t(i)] * sys.P.basis(i, j);
    CHECK(back == d);
  }

  // sum and intersection sanity on P1, P2
  DivisorLattice s = lattice_sum(sys.P1, sys.P2);
  CHECK(s.same_lattice(sys.P12));
  DivisorLattice meet = lattice_intersection(sys.P1, sys.P2);
  CHECK(sys.P1.contains(meet));
  CHECK(sys.P2.contains(meet));
  for (int t = 0; t < 30; ++t) {
    Divisor d = random_combination(meet, rng, 2);
    CHECK(sys.P1.member(d));
    CHECK(sys.P2.member(d));
  }
}

TEST_CASE("lattice_quotient reproduces the jacobian") {
  for (const std::string& name : {"k44", "fig1-d3", "octahedron", "k23-d3"}) {
    Instance inst = gallery(name);
    DivisorLattice D = build_D(inst.graph);
    DivisorLattice L = build_L(inst.graph);
    LatticeQuotient q = lattice_quotient(L, D);
    CHECK(q.free_rank_defect == 0);
    CHECK(is_isomorphic(q.torsion, jacobian(inst.graph)));
    CHECK(lattice_index(L, D) == jacobian(inst.graph).order());
  }
}

TEST_CASE("orbit functionals on canonical labelings") {
  std::mt19937_64 rng(37);
  for (const std::string& name : {"k44", "fig1-d3", "fig1-d4", "octahedron", "k23-d3"}) {
    Instance inst = gallery(name);
    LatticeSystem sys = make_system(inst.graph, inst.action);
    int n = sys.n();

    // members of P1 satisfy F_O(d) = (n/k_O + 1) * sum_O d, and
    // F(d) is a multiple of 2n/kappa
    for (int t = 0; t < 40; ++t) {
      Divisor d = random_combination(sys.P1, rng);
      for (const OrbitInfo& o : sys.sum.orbits) {
        Int orbit_sum = 0;
        for (int v : o.vertices) orbit_sum += d[v];
        int m = n / o.index;
        if (o.type == OrbitType::II) {
          // the pairing i <-> m-i fixes w_m, leaving an extra m*d(w_m) term;
          // d(w_m) is even since w_m is a fixed vertex of the folding
          const Int& wm = d[o.main[size_t(m - 1)]];
          CHECK(wm % 2 == 0);
          CHECK(F_orbit(o, d) == (m + 1) * orbit_sum + m * wm);
        } else {
          CHECK(F_orbit(o, d) == (m + 1) * orbit_sum);
        }
      }
      CHECK(F_total(sys.sum, d) % sys.two_n_over_kappa == 0);
      Divisor d2 = random_combination(sys.P2, rng);
      CHECK(F_total(sys.sum, d2) % sys.two_n_over_kappa == 0);
    }

    // members of P3 are constant on suborbits with the closed-form F values
    for (int t = 0; t < 40; ++t) {
      Divisor d = random_combination(sys.P3, rng);
      for (const OrbitInfo& o : sys.sum.orbits) {
        int m = n / o.index;
        Int a = d[o.main[0]] / o.index;
        CHECK(d[o.main[0]] == a * o.index);
        for (int v : o.main) CHECK(d[v] == a * o.index);
        if (o.type == OrbitType::III) {
          Int b = d[o.other[0]] / o.index;
          for (int v : o.other) CHECK(d[v] == b * o.index);
          CHECK(F_orbit(o, d) == Int(n) * (a + b) * (m + 1));
        } else if (o.type == OrbitType::I) {
          CHECK(F_orbit(o, d) == Int(n) * a * (m + 1));
        } else {
          CHECK(F_orbit(o, d) == Int(n) * a * (m + 2));
        }
      }
    }
  }
}

TEST_CASE("gamma and gamma_orbit") {
  for (const std::string& name : {"k44", "fig1-d3", "octahedron", "k23-d3", "fig1-d4"}) {
    Instance inst = gallery(name);
    LatticeSystem sys = make_system(inst.graph, inst.action);
    CHECK(sys.gamma.degree() == sys.two_n_over_kappa);
    CHECK(sys.Q.member(sys.gamma));
    for (size_t oi = 0; oi < sys.sum.orbits.size(); ++oi) {
      Divisor go = sys.gamma_orbit(int(oi));
      CHECK(go.degree() == 0);
      CHECK(sys.P1.member(go));
      CHECK(sys.P2.member(go));
      Int k = sys.sum.orbits[oi].index;
      CHECK(sys.P0.member(k * go));
    }
  }
  // K44: gamma can be delta on the Type III orbit; gamma_z = delta_z - 4 gamma
  Instance inst = gallery("k44");
  LatticeSystem sys = make_system(inst.graph, inst.action);
  CHECK(sys.two_n_over_kappa == 2);
  for (size_t oi = 0; oi < sys.sum.orbits.size(); ++oi) {
    const OrbitInfo& o = sys.sum.orbits[oi];
    if (o.index != 1) continue;  // the z orbit
    Divisor expected = orbit_indicator(inst.graph, o) - Int(4) * sys.gamma;
    CHECK(sys.gamma_orbit(int(oi)) == expected);
  }
}

TEST_CASE("criterion membership matches lattice membership") {
  std::mt19937_64 rng(41);
  for (const std::string& name : {"k44", "fig1-d3", "octahedron", "k23-d3", "fig1-d4"}) {
    Instance inst = gallery(name);
    LatticeSystem sys = make_system(inst.graph, inst.action);
    int nv = inst.graph.num_vertices();
    int agree12 = 0, agreeP = 0;
    for (int t = 0; t < 200; ++t) {
      Divisor d = random_deg0(nv, rng);
      bool c12 = sys.in_P12_criterion(d);
      CHECK(c12 == sys.P12.member(d));
      bool cp = sys.in_P_criterion(d);
      CHECK(cp == sys.P.member(d));
      agree12 += c12;
      agreeP += cp;
    }
    // some random members of the lattices must also pass their criteria
    for (int t = 0; t < 60; ++t) {
      CHECK(sys.in_P12_criterion(random_combination(sys.P12, rng)));
      CHECK(sys.in_P_criterion(random_combination(sys.P, rng)));
    }
  }
}

TEST_CASE("constructive splits round-trip") {
  std::mt19937_64 rng(43);
  for (const std::string& name : {"k44", "fig1-d3", "octahedron", "k23-d3", "fig1-d4"}) {
    Instance inst = gallery(name);
    LatticeSystem sys = make_system(inst.graph, inst.action);
    for (int t = 0; t < 100; ++t) {
      Divisor d = random_combination(sys.P12, rng);
      auto [d1, d2] = sys.split_P12(d);
      CHECK(sys.P1.member(d1));
      CHECK(sys.P2.member(d2));
      CHECK(d1 + d2 == d);
    }
    for (int t = 0; t < 100; ++t) {
      Divisor d = random_combination(sys.P, rng);
      auto [d12, d3] = sys.split_P(d);
      CHECK(sys.P12.member(d12));
      CHECK(sys.P3.member(d3));
      CHECK(d12 + d3 == d);
      auto [d1, d2] = sys.split_P12(d12);
      CHECK(d1 + d2 + d3 == d);
    }
  }
}

TEST_CASE("splits on random harmonic instances") {
  std::mt19937_64 rng(47);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = random_harmonic(2 + int(seed % 5),
                                    {{OrbitType::I, 1}, {OrbitType::III, 1}}, 3, seed);
    LatticeSystem sys = make_system(inst.graph, inst.action);
    for (int t = 0; t < 20; ++t) {
      Divisor d = random_combination(sys.P, rng, 2);
      auto [d12, d3] = sys.split_P(d);
      CHECK(sys.P12.member(d12));
      CHECK(sys.P3.member(d3));
      auto [d1, d2] = sys.split_P12(d12);
      CHECK(sys.P1.member(d1));
      CHECK(sys.P2.member(d2));
      CHECK(d1 + d2 + d3 == d);
    }
  }
}
