#include "netdecomp/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netdecomp {

Graph readGraphText(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    if (n < 0) {
      if (row >> n >> m) {
        if (n < 0 || m < 0) throw std::invalid_argument("graph text: negative header");
        edges.reserve(m);
      } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
        throw std::invalid_argument("graph text: malformed header line");
      }
      continue;
    }
    long u, v;
    if (row >> u >> v) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("graph text: malformed edge line: " + line);
    }
  }
  if (n < 0) throw std::invalid_argument("graph text: missing header");
  if (static_cast<long>(edges.size()) != m)
    throw std::invalid_argument("graph text: edge count mismatch");
  return Graph::fromEdges(static_cast<int>(n), edges);
}

Graph readGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return readGraphText(in);
}

void writeGraphText(const Graph& g, std::ostream& out) {
  out << g.vertexCount() << ' ' << g.edgeCount() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void writeGraphFile(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open graph file for writing: " + path);
  writeGraphText(g, out);
}

std::string graphToText(const Graph& g) {
  std::ostringstream out;
  writeGraphText(g, out);
  return out.str();
}

}  // namespace netdecomp
