#include "netdecomp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "netdecomp/applications.hpp"
#include "netdecomp/generators.hpp"
#include "netdecomp/json_io.hpp"
#include "netdecomp/oracles.hpp"
#include "netdecomp/separated.hpp"
#include "netdecomp/validate.hpp"

namespace netdecomp {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmtDouble(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Labels stay comma-free so the CSV needs no quoting.
std::string generatorLabel(const ExperimentSpec& s) {
  if (s.generatorType == "gnp")
    return "gnp(" + std::to_string(s.n) + ";" + fmtDouble(s.p) + ")";
  if (s.generatorType == "grid")
    return "grid(" + std::to_string(s.width) + ";" + std::to_string(s.height) + ")";
  if (s.generatorType == "girth6") return "girth6(" + std::to_string(s.primeOrder) + ")";
  return s.generatorType + "(" + std::to_string(s.n) + ")";
}

int maxStrongDiameter(const Graph& g, const NetworkDecomposition& q) {
  int best = 0;
  for (const auto& c : q.clusters) best = std::max(best, strongDiameter(g, c).value_or(0));
  return best;
}

DecSmallVariant parseVariant(const std::string& v) {
  if (v == "threshold") return DecSmallVariant::Threshold;
  if (v == "always-random") return DecSmallVariant::AlwaysRandom;
  if (v == "always-linial") return DecSmallVariant::AlwaysLinial;
  throw std::invalid_argument("unknown dec-small variant: " + v);
}

RulingMethod parseMethod(const std::string& m) {
  if (m == "luby-power") return RulingMethod::LubyPower;
  if (m == "aglp-deterministic") return RulingMethod::AglpDeterministic;
  throw std::invalid_argument("unknown ruling-set method: " + m);
}

}  // namespace

ExperimentSpec parseExperimentSpec(const std::string& jsonText) {
  auto j = ordered_json::parse(jsonText);
  ExperimentSpec s;
  const auto& gen = j.at("generator");
  s.generatorType = gen.at("type").get<std::string>();
  s.n = gen.value("n", 0);
  s.p = gen.value("p", 0.0);
  s.width = gen.value("w", 0);
  s.height = gen.value("h", 0);
  s.primeOrder = gen.value("q", 0);

  s.algorithm = j.at("algorithm").get<std::string>();
  if (j.contains("params")) {
    const auto& p = j.at("params");
    s.k = p.value("k", s.k);
    s.epsilon = p.value("epsilon", s.epsilon);
    s.roundBudget = p.value("t", s.roundBudget);
    s.variant = p.value("variant", s.variant);
    s.method = p.value("method", s.method);
    s.solver = p.value("solver", s.solver);
    s.pipeline = p.value("pipeline", s.pipeline);
    s.sigma = p.value("sigma", s.sigma);
    s.gamma = p.value("gamma", s.gamma);
    s.stretch = p.value("t_stretch", s.stretch);
    s.girthParam = p.value("girth", s.girthParam);
  }
  s.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  s.csvPath = j.value("csv", "");
  s.jsonPath = j.value("json", "");
  s.full = j.value("full", false);

  if (s.seeds.empty()) throw std::invalid_argument("experiment: seeds must be non-empty");
  buildGeneratorGraph(s, s.seeds.front());  // parameter validation before any run
  return s;
}

Graph buildGeneratorGraph(const ExperimentSpec& spec, std::uint64_t seed) {
  SimConfig cfg;
  cfg.seed = seed;
  if (spec.generatorType == "gnp") return genGnp(spec.n, spec.p, cfg);
  if (spec.generatorType == "cycle") return genCycle(spec.n);
  if (spec.generatorType == "path") return genPath(spec.n);
  if (spec.generatorType == "star") return genStar(spec.n - 1);
  if (spec.generatorType == "grid") return genGrid(spec.width, spec.height);
  if (spec.generatorType == "girth6") return genGirth6(spec.primeOrder);
  if (spec.generatorType == "random-tree") return genRandomTree(spec.n, cfg);
  throw std::invalid_argument("unknown generator: " + spec.generatorType);
}

std::vector<ExperimentRow> runExperiment(const ExperimentSpec& spec) {
  std::vector<ExperimentRow> rows;
  for (std::uint64_t seed : spec.seeds) {
    Graph g = buildGeneratorGraph(spec, seed);
    SimConfig cfg;
    cfg.seed = seed;

    ExperimentRow row;
    row.generator = generatorLabel(spec);
    row.seed = seed;
    row.n = g.vertexCount();
    row.m = g.edgeCount();
    row.algorithm = spec.algorithm;
    row.k = spec.k;
    row.epsilon = spec.epsilon;

    auto started = std::chrono::steady_clock::now();
    if (spec.algorithm == "decompose" || spec.algorithm == "rs-decompose" ||
        spec.algorithm == "sep-decompose") {
      DecomposeResult res;
      if (spec.algorithm == "decompose") {
        DecomposeOptions opt{spec.k, spec.epsilon, spec.roundBudget, parseVariant(spec.variant)};
        res = decompose(g, opt, cfg);
      } else if (spec.algorithm == "rs-decompose") {
        RsDecomposeOptions opt;
        opt.k = spec.k;
        opt.method = parseMethod(spec.method);
        res = rsDecompose(g, opt, cfg);
      } else {
        SepDecomposeOptions opt;
        opt.k = spec.k;
        opt.sigma = spec.sigma;
        res = sepDecompose(g, opt, cfg);
      }
      row.sigma = res.decomposition.cert.separation;
      row.labelCount = res.decomposition.distinctLabelCount();
      row.maxClusterDiam = maxStrongDiameter(g, res.decomposition);
      row.rounds = res.ledger.total;
      row.validated = validateDecomposition(g, res.decomposition).passed;
      if (spec.full) row.payload = decompositionToJson(res.decomposition);
    } else if (spec.algorithm == "low-intersect") {
      auto res = lowIntersecting(g, spec.k, spec.gamma, cfg);
      row.sigma = 2 * spec.gamma + 1;
      row.labelCount = res.beta;
      row.maxClusterDiam = maxStrongDiameter(g, res.source);
      row.rounds = res.ledger.total;
      row.validated = validateLowIntersecting(g, res).passed;
      if (spec.full) row.payload = decompositionToJson(res.source);
    } else if (spec.algorithm == "mds") {
      auto solver = spec.solver == "greedy" ? MdsSolver::Greedy : MdsSolver::Exact;
      auto pipeline =
          spec.pipeline == "det" ? MdsPipeline::Deterministic : MdsPipeline::Randomized;
      auto res = approxMds(g, spec.k, solver, pipeline, cfg);
      row.sigma = res.decomposition.cert.separation;
      row.labelCount = res.decomposition.distinctLabelCount();
      row.maxClusterDiam = maxStrongDiameter(g, res.decomposition);
      row.rounds = res.ledger.total;
      row.validated = true;  // domination is asserted inside approxMds
      if (g.vertexCount() <= kMdsCap) {
        auto opt = bruteMds(g);
        row.ratioVsOracle =
            opt.size == 0 ? "1" : fmtDouble(static_cast<double>(res.value.size()) / opt.size);
      }
      if (spec.full) row.payload = decompositionToJson(res.decomposition);
    } else if (spec.algorithm == "color") {
      auto res = approxMinColoring(g, spec.k, cfg);
      row.sigma = res.decomposition.cert.separation;
      row.labelCount = distinctColors(res.value);
      row.maxClusterDiam = maxStrongDiameter(g, res.decomposition);
      row.rounds = res.ledger.total;
      row.validated = isProperColoring(g, res.value);
      if (g.vertexCount() <= kChromaticCap && g.vertexCount() > 0) {
        int chi = bruteChromatic(g);
        row.ratioVsOracle = fmtDouble(static_cast<double>(distinctColors(res.value)) / chi);
      }
    } else if (spec.algorithm == "color-tf") {
      auto res = colorTriangleFree(g, spec.epsilon, cfg);
      row.sigma = 2;
      row.labelCount = distinctColors(res.value);
      row.rounds = res.ledger.total;
      row.validated = isProperColoring(g, res.value);
    } else if (spec.algorithm == "color-girth") {
      auto res = colorHighGirth(g, spec.girthParam, spec.epsilon, cfg);
      row.sigma = 2;
      row.labelCount = distinctColors(res.value);
      row.rounds = res.ledger.total;
      row.validated = isProperColoring(g, res.value);
    } else if (spec.algorithm == "spanner") {
      auto res = approxTSpanner(g, spec.stretch, spec.k, cfg);
      row.sigma = res.decomposition.cert.separation;
      row.labelCount = res.decomposition.distinctLabelCount();
      row.maxClusterDiam = maxStrongDiameter(g, res.decomposition);
      row.rounds = res.ledger.total;
      row.validated = validateStretch(g, res.value.edges, spec.stretch).report.passed;
      if (g.edgeCount() <= kSpannerCap) {
        auto opt = bruteMinTSpanner(g, spec.stretch);
        if (opt.size > 0)
          row.ratioVsOracle =
              fmtDouble(static_cast<double>(res.value.intraEdges) / opt.size);
      }
    } else {
      throw std::invalid_argument("unknown experiment algorithm: " + spec.algorithm);
    }
    row.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           started)
                     .count();
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.generator, a.seed) < std::tie(b.generator, b.seed);
  });
  return rows;
}

std::string rowsToCsv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "generator,seed,n,m,algorithm,k,epsilon,sigma,labelCount,maxClusterDiam,rounds,"
      "ratioVsOracle,validated\n";
  for (const auto& r : rows) {
    out += r.generator + ',' + std::to_string(r.seed) + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.m) + ',' + r.algorithm + ',' + std::to_string(r.k) + ',' +
           fmtDouble(r.epsilon) + ',' + std::to_string(r.sigma) + ',' +
           std::to_string(r.labelCount) + ',' + std::to_string(r.maxClusterDiam) + ',' +
           std::to_string(r.rounds) + ',' + r.ratioVsOracle + ',' +
           (r.validated ? "1" : "0") + '\n';
  }
  return out;
}

std::string rowsToJson(const ExperimentSpec& spec, const std::vector<ExperimentRow>& rows) {
  ordered_json out;
  out["generator"] = generatorLabel(spec);
  out["algorithm"] = spec.algorithm;
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json j{{"generator", r.generator},
                   {"seed", r.seed},
                   {"n", r.n},
                   {"m", r.m},
                   {"algorithm", r.algorithm},
                   {"k", r.k},
                   {"epsilon", r.epsilon},
                   {"sigma", r.sigma},
                   {"labelCount", r.labelCount},
                   {"maxClusterDiam", r.maxClusterDiam},
                   {"rounds", r.rounds},
                   {"ratioVsOracle", r.ratioVsOracle},
                   {"validated", r.validated},
                   {"wallMs", r.wallMs}};
    if (!r.payload.empty()) j["decomposition"] = ordered_json::parse(r.payload);
    arr.push_back(std::move(j));
  }
  out["rows"] = std::move(arr);
  return out.dump(2);
}

std::vector<ExperimentRow> runExperimentToFiles(const ExperimentSpec& spec) {
  auto rows = runExperiment(spec);
  if (!spec.csvPath.empty()) {
    std::ofstream out(spec.csvPath);
    if (!out) throw std::runtime_error("cannot write csv: " + spec.csvPath);
    out << rowsToCsv(rows);
  }
  if (!spec.jsonPath.empty()) {
    std::ofstream out(spec.jsonPath);
    if (!out) throw std::runtime_error("cannot write json: " + spec.jsonPath);
    out << rowsToJson(spec, rows);
  }
  return rows;
}

}  // namespace netdecomp
