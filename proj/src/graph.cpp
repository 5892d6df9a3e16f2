#include "crit/graph.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace crit {

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

int Multigraph::edge_count(int u, int w) const {
  int c = 0;
  for (const auto& [a, b] : edges)
    if ((a == u && b == w) || (a == w && b == u)) ++c;
  return c;
}

int Multigraph::vertex_index(const std::string& label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (labels[size_t(i)] == label) return i;
  return -1;
}

bool Multigraph::connected() const {
  if (num_vertices() == 0) return false;
  std::vector<char> seen(size_t(num_vertices()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges) {
      int w = a == v ? b : (b == v ? a : -1);
      if (w >= 0 && !seen[size_t(w)]) {
        seen[size_t(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

Multigraph build_graph(const std::vector<std::string>& labels,
                       const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
  Multigraph g;
  std::map<std::string, int> index;
  for (const auto& l : labels) {
    if (index.count(l)) throw std::invalid_argument("duplicate vertex label: " + l);
    index[l] = int(g.labels.size());
    g.labels.push_back(l);
  }
  for (const auto& [u, w] : edge_pairs) {
    auto iu = index.find(u), iw = index.find(w);
    if (iu == index.end()) throw std::invalid_argument("unknown endpoint: " + u);
    if (iw == index.end()) throw std::invalid_argument("unknown endpoint: " + w);
    if (iu->second == iw->second) throw std::invalid_argument("loop edge at: " + u);
    g.edges.emplace_back(iu->second, iw->second);
  }
  if (!g.connected()) throw std::invalid_argument("graph is not connected");
  return g;
}

Divisor firing_divisor(const Multigraph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("firing_divisor: unknown vertex");
  Divisor d(g.num_vertices());
  for (const auto& [a, b] : g.edges) {
    if (a == v) {
      d[v] -= 1;
      d[b] += 1;
    } else if (b == v) {
      d[v] -= 1;
      d[a] += 1;
    }
  }
  return d;
}

IntMat laplacian(const Multigraph& g) {
  int n = g.num_vertices();
  IntMat l(n, n);
  for (const auto& [a, b] : g.edges) {
    l(a, a) += 1;
    l(b, b) += 1;
    l(a, b) -= 1;
    l(b, a) -= 1;
  }
  return l;
}

IntMat reduced_laplacian(const Multigraph& g, int q) {
  if (q < 0 || q >= g.num_vertices()) throw std::invalid_argument("reduced_laplacian: unknown vertex");
  IntMat l = laplacian(g);
  int n = g.num_vertices();
  IntMat r(n - 1, n - 1);
  for (int i = 0, ri = 0; i < n; ++i) {
    if (i == q) continue;
    for (int j = 0, rj = 0; j < n; ++j) {
      if (j == q) continue;
      r(ri, rj) = l(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

AbelianGroup jacobian(const Multigraph& g) {
  if (g.num_vertices() == 1) return AbelianGroup();
  return group_from_snf(snf(reduced_laplacian(g, 0)));
}

}  // namespace crit
