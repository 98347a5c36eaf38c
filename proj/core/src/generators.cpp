#include "netdecomp/generators.hpp"

#include <stdexcept>
#include <vector>

namespace netdecomp {

namespace {

bool isPrime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace

Graph genCycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return Graph::fromEdges(n, edges);
}

Graph genPath(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::fromEdges(n, edges);
}

Graph genStar(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star: leaves must be >= 0");
  std::vector<Edge> edges;
  for (int i = 2; i <= leaves + 1; ++i) edges.emplace_back(1, i);
  return Graph::fromEdges(leaves + 1, edges);
}

Graph genGrid(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid: dimensions must be >= 1");
  auto id = [&](int x, int y) { return y * width + x + 1; };
  std::vector<Edge> edges;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (x + 1 < width) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < height) edges.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  return Graph::fromEdges(width * height, edges);
}

Graph genGnp(int n, double p, const SimConfig& cfg) {
  if (n < 0 || p < 0 || p > 1) throw std::invalid_argument("gnp: bad parameters");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rngFor(cfg.seed, "gnp", u, v).bernoulli(p)) edges.emplace_back(u, v);
  return Graph::fromEdges(n, edges);
}

Graph genRandomTree(int n, const SimConfig& cfg) {
  if (n < 1) throw std::invalid_argument("random-tree: n must be >= 1");
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) {
    int parent = rngFor(cfg.seed, "random-tree", v, 0).nextInt(v - 1) + 1;
    edges.emplace_back(parent, v);
  }
  return Graph::fromEdges(n, edges);
}

Graph genGirth6(int q) {
  if (!isPrime(q)) throw std::invalid_argument("girth6: q must be prime");
  // Canonical homogeneous triples over F_q: (1,a,b), (0,1,b), (0,0,1).
  std::vector<std::array<int, 3>> points;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) points.push_back({1, a, b});
  for (int b = 0; b < q; ++b) points.push_back({0, 1, b});
  points.push_back({0, 0, 1});

  const int m = static_cast<int>(points.size());  // q^2+q+1
  std::vector<Edge> edges;
  for (int pi = 0; pi < m; ++pi) {
    for (int li = 0; li < m; ++li) {
      long dot = 0;
      for (int c = 0; c < 3; ++c) dot += static_cast<long>(points[pi][c]) * points[li][c];
      if (dot % q == 0) edges.emplace_back(pi + 1, m + li + 1);
    }
  }
  return Graph::fromEdges(2 * m, edges);
}

}  // namespace netdecomp
