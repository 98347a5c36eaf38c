#include "netdecomp/json_io.hpp"

#include <json.hpp>

namespace netdecomp {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json ledgerJson(const RoundLedger& ledger) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : ledger.entries) {
    entries.push_back(ordered_json{{"phase", e.phase},
                                   {"base", e.base},
                                   {"multiplier", e.multiplier},
                                   {"charged", e.charged}});
  }
  return ordered_json{{"entries", std::move(entries)}, {"total", ledger.total}};
}

ordered_json coloringJson(const Coloring& c) {
  ordered_json pairs = ordered_json::array();
  for (size_t v = 1; v < c.colors.size(); ++v)
    pairs.push_back(ordered_json::array({v, c.colors[v]}));
  return ordered_json{{"palette", c.palette}, {"colors", std::move(pairs)}};
}

ordered_json decompositionJson(const NetworkDecomposition& q) {
  ordered_json clusters = ordered_json::array();
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    clusters.push_back(ordered_json{{"label", q.labels[ci]},
                                    {"leader", q.leaders[ci]},
                                    {"members", q.clusters[ci].items()}});
  }
  return ordered_json{{"cert",
                       {{"d", q.cert.diameter},
                        {"l", q.cert.labelCount},
                        {"sigma", q.cert.separation}}},
                      {"realizedDom", q.realizedDom},
                      {"clusters", std::move(clusters)}};
}

}  // namespace

std::string ledgerToJson(const RoundLedger& ledger) { return ledgerJson(ledger).dump(2); }

std::string coloringToJson(const Coloring& c) { return coloringJson(c).dump(2); }

std::string decompositionToJson(const NetworkDecomposition& q) {
  return decompositionJson(q).dump(2);
}

NetworkDecomposition decompositionFromJson(const std::string& text) {
  auto j = ordered_json::parse(text);
  NetworkDecomposition q;
  q.cert.diameter = j.at("cert").at("d").get<int>();
  q.cert.labelCount = j.at("cert").at("l").get<int>();
  q.cert.separation = j.at("cert").at("sigma").get<int>();
  q.realizedDom = j.value("realizedDom", 0);
  for (const auto& c : j.at("clusters")) {
    q.labels.push_back(c.at("label").get<int>());
    q.leaders.push_back(c.at("leader").get<Vertex>());
    q.clusters.emplace_back(c.at("members").get<std::vector<Vertex>>());
    q.level.push_back(0);
  }
  return q;
}

std::string validationToJson(const ValidationReport& report) {
  ordered_json violations = ordered_json::array();
  for (const auto& [rule, witness] : report.violations)
    violations.push_back(ordered_json{{"rule", rule}, {"witness", witness}});
  return ordered_json{{"passed", report.passed}, {"violations", std::move(violations)}}.dump(2);
}

std::string mdsResultToJson(const ApproxResult<VertexSet>& r, int oracleOptimum) {
  ordered_json j{{"value", r.value.items()},
                 {"size", r.value.size()},
                 {"bound", r.bound}};
  if (oracleOptimum >= 0) j["oracleOptimum"] = oracleOptimum;
  j["decomposition"] = ordered_json::parse(decompositionToJson(r.decomposition));
  j["ledger"] = ledgerJson(r.ledger);
  return j.dump(2);
}

std::string coloringResultToJson(const ApproxResult<Coloring>& r, int oracleOptimum) {
  ordered_json j{{"value", ordered_json::parse(coloringToJson(r.value))},
                 {"distinctColors", distinctColors(r.value)},
                 {"bound", r.bound}};
  if (oracleOptimum >= 0) j["oracleOptimum"] = oracleOptimum;
  j["ledger"] = ledgerJson(r.ledger);
  return j.dump(2);
}

std::string spannerResultToJson(const ApproxResult<SpannerValue>& r, int oracleOptimum) {
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : r.value.edges) edges.push_back(ordered_json::array({u, v}));
  ordered_json j{{"edges", std::move(edges)},
                 {"intraEdges", r.value.intraEdges},
                 {"crossingEdges", r.value.crossingEdges},
                 {"bound", r.bound}};
  if (oracleOptimum >= 0) j["oracleOptimum"] = oracleOptimum;
  j["ledger"] = ledgerJson(r.ledger);
  return j.dump(2);
}

}  // namespace netdecomp
