#include "crit/randgen.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace crit {

namespace {

// 1-based wrap into 1..m
int wrap1(int j, int m) { return (j % m + m - 1) % m + 1; }

struct FormalOrbits {
  std::vector<std::string> labels;
  Perm s1, s2;
};

FormalOrbits build_vertices(int n, const std::vector<OrbitSpec>& spec) {
  FormalOrbits out;
  std::vector<int> s1map, s2map;
  for (size_t oi = 0; oi < spec.size(); ++oi) {
    const OrbitSpec& o = spec[oi];
    if (o.index < 1 || n % o.index != 0)
      throw std::invalid_argument("random_harmonic: orbit index must divide n");
    int m = n / o.index;
    int base = int(out.labels.size());
    std::string prefix = "o" + std::to_string(oi);
    switch (o.type) {
      case OrbitType::I:
        for (int i = 1; i <= m; ++i) out.labels.push_back(prefix + "z" + std::to_string(i));
        for (int i = 1; i <= m; ++i) {
          s1map.push_back(base + wrap1(m + 1 - i, m) - 1);
          s2map.push_back(base + wrap1(m + 2 - i, m) - 1);
        }
        break;
      case OrbitType::II:
        if (m % 2 != 0)
          throw std::invalid_argument(
              "random_harmonic: Type II orbit requires n / index to be even");
        for (int i = 1; i <= m; ++i) out.labels.push_back(prefix + "w" + std::to_string(i));
        for (int i = 1; i <= m; ++i) {
          s1map.push_back(base + wrap1(m - i, m) - 1);
          s2map.push_back(base + wrap1(m + 1 - i, m) - 1);
        }
        break;
      case OrbitType::III:
        for (int i = 1; i <= m; ++i) out.labels.push_back(prefix + "x" + std::to_string(i));
        for (int i = 1; i <= m; ++i) out.labels.push_back(prefix + "y" + std::to_string(i));
        for (int i = 1; i <= m; ++i) {
          s1map.push_back(base + m + wrap1(m + 1 - i, m) - 1);
          s2map.push_back(base + m + wrap1(m + 2 - i, m) - 1);
        }
        for (int i = 1; i <= m; ++i) {
          s1map.push_back(base + wrap1(m + 1 - i, m) - 1);
          s2map.push_back(base + wrap1(m + 2 - i, m) - 1);
        }
        break;
    }
  }
  out.s1 = Perm(std::move(s1map));
  out.s2 = Perm(std::move(s2map));
  if (!out.s1.is_bijection() || !out.s2.is_bijection() || !(out.s1 * out.s1).is_identity() ||
      !(out.s2 * out.s2).is_identity())
    throw std::logic_error("random_harmonic: formal generators are not involutions");
  return out;
}

std::vector<Perm> vertex_elements(int n, const Perm& s1, const Perm& s2) {
  std::vector<Perm> els;
  Perm tau = s1 * s2;
  Perm r(s1.size());
  for (int j = 0; j < n; ++j) {
    els.push_back(r);
    r = tau * r;
  }
  r = Perm(s1.size());
  for (int j = 0; j < n; ++j) {
    els.push_back(s1 * r);
    r = tau * r;
  }
  return els;
}

bool pointwise_free(const std::vector<Perm>& els, int u, int v) {
  for (size_t i = 1; i < els.size(); ++i)
    if (els[i](u) == u && els[i](v) == v) return false;
  return true;
}

bool connected_with(const std::vector<std::pair<int, int>>& edges, int nv) {
  if (nv == 0) return false;
  std::vector<int> comp(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) comp[size_t(i)] = i;
  auto find = [&](int x) {
    while (comp[size_t(x)] != x) x = comp[size_t(x)] = comp[size_t(comp[size_t(x)])];
    return x;
  };
  for (auto [u, v] : edges) comp[size_t(find(u))] = find(v);
  for (int i = 1; i < nv; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

}  // namespace

Instance random_harmonic(int n, const std::vector<OrbitSpec>& spec, int edge_orbit_count,
                         std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_harmonic: n must be at least 2");
  if (spec.empty()) throw std::invalid_argument("random_harmonic: empty orbit spec");
  if (edge_orbit_count < 1)
    throw std::invalid_argument("random_harmonic: need at least one edge orbit");

  FormalOrbits fo = build_vertices(n, spec);
  int nv = int(fo.labels.size());
  if (nv < 2) throw std::invalid_argument("random_harmonic: fewer than two vertices");
  std::vector<Perm> els = vertex_elements(n, fo.s1, fo.s2);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, nv - 1);

  const int kAttempts = 300;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    // per sampled orbit: normalized pair -> edge id, for the generator maps
    std::vector<std::map<std::pair<int, int>, int>> orbit_edges;
    bool ok = true;
    for (int t = 0; t < edge_orbit_count && ok; ++t) {
      int u = -1, v = -1;
      bool found = false;
      for (int tries = 0; tries < 200; ++tries) {
        u = pick(rng);
        v = pick(rng);
        if (u != v && pointwise_free(els, u, v)) { found = true; break; }
      }
      if (!found) { ok = false; break; }
      std::map<std::pair<int, int>, int> omap;
      for (const Perm& g : els) {
        int a = g(u), b = g(v);
        if (a > b) std::swap(a, b);
        auto key = std::make_pair(a, b);
        if (omap.count(key)) continue;
        omap[key] = int(edges.size());
        edges.emplace_back(a, b);
      }
      orbit_edges.push_back(std::move(omap));
    }
    if (!ok || !connected_with(edges, nv)) continue;

    Instance inst;
    inst.graph.labels = fo.labels;
    inst.graph.edges = edges;

    auto edge_perm = [&](const Perm& s) {
      Perm p(int(edges.size()));
      for (const auto& omap : orbit_edges)
        for (const auto& [key, id] : omap) {
          int a = s(key.first), b = s(key.second);
          if (a > b) std::swap(a, b);
          auto it = omap.find({a, b});
          if (it == omap.end()) throw std::logic_error("random_harmonic: edge orbit not closed");
          p.map[size_t(id)] = it->second;
        }
      return p;
    };
    GeneratorPerm g1{fo.s1, edge_perm(fo.s1)};
    GeneratorPerm g2{fo.s2, edge_perm(fo.s2)};

    try {
      inst.action = validate_action(inst.graph, g1, g2, n);
    } catch (const std::invalid_argument&) {
      // tau order or faithfulness can fall short for unlucky edge draws
      continue;
    }
    HarmonicWitness w;
    if (!is_harmonic(inst.graph, inst.action, &w))
      throw std::logic_error("random_harmonic: generated action is not harmonic (element " +
                             w.element + ")");
    return inst;
  }
  throw std::runtime_error(
      "random_harmonic: could not build a connected valid instance for this spec");
}

}  // namespace crit
