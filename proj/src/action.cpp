#include "crit/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crit {

bool Perm::is_bijection() const {
  std::vector<char> seen(map.size(), 0);
  for (int x : map) {
    if (x < 0 || x >= size() || seen[size_t(x)]) return false;
    seen[size_t(x)] = 1;
  }
  return true;
}

int Perm::order() const {
  Perm p = *this;
  int o = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++o;
    if (o > size() * size() + 1) throw std::logic_error("Perm::order: runaway");
  }
  return o;
}

std::string orbit_type_name(OrbitType t) {
  switch (t) {
    case OrbitType::I: return "I";
    case OrbitType::II: return "II";
    default: return "III";
  }
}

int ActionSummary::orbit_of(int v) const {
  for (size_t i = 0; i < orbits.size(); ++i)
    if (std::binary_search(orbits[i].vertices.begin(), orbits[i].vertices.end(), v))
      return int(i);
  return -1;
}

namespace {

// endpoint pair of edge e mapped through a vertex perm, as unordered pair
std::pair<int, int> mapped_endpoints(const Multigraph& g, const Perm& vp, int e) {
  int a = vp(g.edges[size_t(e)].first), b = vp(g.edges[size_t(e)].second);
  return {std::min(a, b), std::max(a, b)};
}

std::pair<int, int> endpoints_of(const Multigraph& g, int e) {
  int a = g.edges[size_t(e)].first, b = g.edges[size_t(e)].second;
  return {std::min(a, b), std::max(a, b)};
}

void check_compat(const Multigraph& g, const GeneratorPerm& s, const std::string& name) {
  if (s.vertex.size() != g.num_vertices() || s.edge.size() != g.num_edges())
    throw std::invalid_argument(name + ": permutation size mismatch");
  if (!s.vertex.is_bijection() || !s.edge.is_bijection())
    throw std::invalid_argument(name + ": not a bijection");
  for (int e = 0; e < g.num_edges(); ++e)
    if (mapped_endpoints(g, s.vertex, e) != endpoints_of(g, s.edge(e)))
      throw std::invalid_argument(name + ": edge permutation incompatible with vertex permutation");
}

}  // namespace

DihedralAction validate_action(const Multigraph& g, const GeneratorPerm& sigma1,
                               const GeneratorPerm& sigma2, int n) {
  if (n < 2) throw std::invalid_argument("validate_action: n must be at least 2");
  check_compat(g, sigma1, "sigma1");
  check_compat(g, sigma2, "sigma2");
  for (const auto* s : {&sigma1, &sigma2}) {
    if (!(s->vertex * s->vertex).is_identity() || !(s->edge * s->edge).is_identity())
      throw std::invalid_argument("validate_action: generator is not an involution");
  }

  Perm tv = sigma1.vertex * sigma2.vertex;
  Perm te = sigma1.edge * sigma2.edge;
  // order of tau on the whole graph action (vertices and edges jointly)
  {
    Perm pv = tv, pe = te;
    int o = 1;
    while (!(pv.is_identity() && pe.is_identity())) {
      pv = pv * tv;
      pe = pe * te;
      ++o;
      if (o > 2 * n) break;
    }
    if (o != n) throw std::invalid_argument("validate_action: tau does not have order n");
  }

  DihedralAction a;
  a.n = n;
  a.sigma1 = sigma1;
  a.sigma2 = sigma2;
  Perm rv(g.num_vertices()), re(g.num_edges());
  for (int j = 0; j < n; ++j) {
    a.elements.push_back({j == 0 ? "id" : "t^" + std::to_string(j), rv, re});
    rv = tv * rv;
    re = te * re;
  }
  rv = Perm(g.num_vertices());
  re = Perm(g.num_edges());
  for (int j = 0; j < n; ++j) {
    a.elements.push_back({j == 0 ? "s1" : "s1*t^" + std::to_string(j),
                          sigma1.vertex * rv, sigma1.edge * re});
    rv = tv * rv;
    re = te * re;
  }
  // faithfulness: the 2n elements must be pairwise distinct
  for (size_t i = 0; i < a.elements.size(); ++i)
    for (size_t j = i + 1; j < a.elements.size(); ++j)
      if (a.elements[i].vertex == a.elements[j].vertex && a.elements[i].edge == a.elements[j].edge)
        throw std::invalid_argument("validate_action: action is not faithful");
  return a;
}

Perm derive_edge_perm(const Multigraph& g, const Perm& vertex_perm) {
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = endpoints_of(g, e);
    if (g.edge_count(a, b) > 1)
      throw std::invalid_argument("derive_edge_perm: graph has parallel edges");
  }
  std::vector<int> em(size_t(g.num_edges()), -1);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto want = mapped_endpoints(g, vertex_perm, e);
    int found = -1;
    for (int f = 0; f < g.num_edges(); ++f)
      if (endpoints_of(g, f) == want) {
        found = f;
        break;
      }
    if (found < 0)
      throw std::invalid_argument("derive_edge_perm: vertex permutation is not an automorphism");
    em[size_t(e)] = found;
  }
  Perm p(std::move(em));
  if (!p.is_bijection()) throw std::invalid_argument("derive_edge_perm: not an automorphism");
  return p;
}

bool is_harmonic(const Multigraph& g, const DihedralAction& a, HarmonicWitness* witness) {
  for (const GroupElement& el : a.elements) {
    if (el.vertex.is_identity() && el.edge.is_identity()) continue;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (el.edge(e) != e) continue;
      auto [u, v] = g.edges[size_t(e)];
      if (!(el.vertex(u) == v && el.vertex(v) == u)) {
        if (witness) *witness = {el.word, e};
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<std::vector<int>> vertex_orbits(const Multigraph& g, const DihedralAction& a) {
  int n = g.num_vertices();
  std::vector<int> rep(size_t(n), -1);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < n; ++v) {
    if (rep[size_t(v)] >= 0) continue;
    std::vector<int> orb;
    std::set<int> seen;
    for (const GroupElement& el : a.elements) seen.insert(el.vertex(v));
    for (int w : seen) {
      rep[size_t(w)] = int(orbits.size());
      orb.push_back(w);
    }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

bool fixes_any(const Perm& p, const std::vector<int>& vs) {
  for (int v : vs)
    if (p(v) == v) return true;
  return false;
}

}  // namespace

void canonical_labeling(const Multigraph& g, const DihedralAction& a, OrbitInfo& orbit) {
  (void)g;
  const Perm& s1 = a.sigma1.vertex;
  const Perm& s2 = a.sigma2.vertex;
  Perm tau_inv = (s1 * s2).inverse();
  int m = int(orbit.type == OrbitType::III ? orbit.vertices.size() / 2 : orbit.vertices.size());
  auto wrap = [m](int i) { return ((i - 1) % m + m) % m; };  // 1-based index -> 0-based slot
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string("canonical_labeling: identity check failed: ") + what);
  };

  orbit.main.assign(size_t(m), -1);
  orbit.other.clear();

  if (orbit.type == OrbitType::I) {
    int z1 = -1;
    for (int v : orbit.vertices)
      if (s2(v) == v) {
        z1 = v;
        break;
      }  // vertices sorted, so this is the smallest fixed index
    if (z1 < 0) fail("Type I orbit without sigma2-fixed vertex");
    orbit.main[0] = z1;
    for (int i = 1; i < m; ++i) orbit.main[size_t(i)] = tau_inv(orbit.main[size_t(i - 1)]);
    for (int i = 1; i <= m; ++i) {
      if (s1(orbit.main[size_t(wrap(i))]) != orbit.main[size_t(wrap(m + 1 - i))]) fail("sigma1 on z");
      if (s2(orbit.main[size_t(wrap(i))]) != orbit.main[size_t(wrap(m + 2 - i))]) fail("sigma2 on z");
    }
  } else if (orbit.type == OrbitType::II) {
    int wm = -1;
    for (int v : orbit.vertices)
      if (s1(v) == v) {
        wm = v;
        break;
      }
    if (wm < 0) fail("Type II orbit without sigma1-fixed vertex");
    Perm tau = s1 * s2;
    orbit.main[size_t(m - 1)] = wm;  // w_m
    for (int i = m - 1; i >= 1; --i) orbit.main[size_t(i - 1)] = tau(orbit.main[size_t(i)]);
    for (int i = 1; i <= m; ++i) {
      if (s1(orbit.main[size_t(wrap(i))]) != orbit.main[size_t(wrap(m - i))]) fail("sigma1 on w");
      if (s2(orbit.main[size_t(wrap(i))]) != orbit.main[size_t(wrap(m + 1 - i))]) fail("sigma2 on w");
    }
  } else {
    orbit.other.assign(size_t(m), -1);
    int x1 = orbit.vertices.front();
    orbit.main[0] = x1;
    for (int i = 1; i < m; ++i) orbit.main[size_t(i)] = tau_inv(orbit.main[size_t(i - 1)]);
    for (int j = 1; j <= m; ++j)
      orbit.other[size_t(j - 1)] = s1(orbit.main[size_t(wrap(m + 1 - j))]);
    for (int i = 1; i <= m; ++i) {
      if (s1(orbit.main[size_t(wrap(i))]) != orbit.other[size_t(wrap(m + 1 - i))]) fail("sigma1 on x");
      if (s2(orbit.main[size_t(wrap(i))]) != orbit.other[size_t(wrap(m + 2 - i))]) fail("sigma2 on x");
      if (s1(orbit.other[size_t(wrap(i))]) != orbit.main[size_t(wrap(m + 1 - i))]) fail("sigma1 on y");
      if (s2(orbit.other[size_t(wrap(i))]) != orbit.main[size_t(wrap(m + 2 - i))]) fail("sigma2 on y");
    }
  }
}

namespace {

ActionSummary classify_once(const Multigraph& g, const DihedralAction& a) {
  ActionSummary s;
  s.action = a;
  int n = a.n;
  for (auto& orb : vertex_orbits(g, a)) {
    OrbitInfo info;
    info.vertices = std::move(orb);
    bool f2 = fixes_any(a.sigma2.vertex, info.vertices);
    bool f1 = fixes_any(a.sigma1.vertex, info.vertices);
    int sz = int(info.vertices.size());
    if (f2) {
      info.type = OrbitType::I;
      ++s.t1;
    } else if (f1) {
      info.type = OrbitType::II;
      ++s.t2;
    } else {
      info.type = OrbitType::III;
      ++s.t3;
    }
    if (info.type == OrbitType::III) {
      if ((2 * n) % sz != 0) throw std::logic_error("Type III orbit size does not divide 2n");
      info.index = 2 * n / sz;
    } else {
      if (n % sz != 0) throw std::logic_error("inertial orbit size does not divide n");
      info.index = n / sz;
    }
    s.orbits.push_back(std::move(info));
  }
  s.kappa = 1;
  for (const auto& o : s.orbits) s.kappa = std::lcm(s.kappa, o.index);
  s.t_tilde = std::max(s.t1 - 1, 0) + std::max(s.t2 - 1, 0);
  if (n % 2 == 1)
    s.parity = ParityCase::NOdd;
  else
    s.parity = (s.kappa % 2 == 1) ? ParityCase::NEvenKappaOdd : ParityCase::NEvenKappaEven;
  return s;
}

}  // namespace

ActionSummary classify_orbits(const Multigraph& g, const DihedralAction& a) {
  ActionSummary s = classify_once(g, a);
  if (s.t2 > 0 && s.t1 == 0) {
    DihedralAction b = validate_action(g, a.sigma2, a.sigma1, a.n);
    b.swapped = true;
    s = classify_once(g, b);
    if (s.t2 > 0 && s.t1 == 0)
      throw std::logic_error("classify_orbits: swap did not produce Type I orbits");
  }
  for (auto& o : s.orbits) canonical_labeling(g, s.action, o);
  return s;
}

}  // namespace crit
