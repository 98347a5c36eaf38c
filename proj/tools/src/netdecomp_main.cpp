// netdecomp CLI: graph generation, decompositions, applications,
// verification, and the experiment runner.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "netdecomp/applications.hpp"
#include "netdecomp/experiment.hpp"
#include "netdecomp/generators.hpp"
#include "netdecomp/graph_io.hpp"
#include "netdecomp/json_io.hpp"
#include "netdecomp/oracles.hpp"
#include "netdecomp/separated.hpp"
#include "netdecomp/validate.hpp"

namespace {

using namespace netdecomp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

std::uint64_t defaultSeed() {
  if (const char* env = std::getenv("NETDECOMP_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("NETDECOMP_SEED is not a number");
    }
  }
  return 1;
}

void writeOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

DecSmallVariant parseVariant(const std::string& v) {
  if (v == "threshold") return DecSmallVariant::Threshold;
  if (v == "always-random") return DecSmallVariant::AlwaysRandom;
  if (v == "always-linial") return DecSmallVariant::AlwaysLinial;
  throw std::invalid_argument("unknown variant: " + v);
}

struct Cli {
  CLI::App app{"network decompositions, colorings, dominating sets and spanners"};
  std::function<int()> run;
  std::uint64_t seed = defaultSeed();

  // Shared option storage.
  std::string graphPath, outPath, decompositionPath;
  std::string type = "gnp", variant = "threshold", method = "aglp-deterministic";
  std::string scheme = "h-random", solver = "exact", pipeline = "rand", mode = "strong";
  std::string specPath;
  int n = 10, w = 3, h = 3, q = 2;
  double p = 0.5;
  int k = 2, roundBudget = kUntilFixpoint, sigma = 3, gamma = 1, stretch = 2, girthParam = 4;
  double epsilon = 0.5;
  bool full = false;

  Cli() { build(); }

  SimConfig cfg() const {
    SimConfig c;
    c.seed = seed;
    return c;
  }

  Graph loadGraph() const { return readGraphFile(graphPath); }

  void build();
};

void Cli::build() {
  app.require_subcommand(1);

  auto addSeed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "RNG seed"); };

  {
    auto* cmd = app.add_subcommand("generate", "emit a graph in the text format");
    cmd->add_option("--type", type, "gnp|cycle|path|star|grid|girth6|random-tree");
    cmd->add_option("--n", n, "vertex count");
    cmd->add_option("--p", p, "edge probability (gnp)");
    cmd->add_option("--width", w, "grid width");
    cmd->add_option("--height", h, "grid height");
    cmd->add_option("--q", q, "prime order (girth6)");
    cmd->add_option("--out", outPath, "output file (default stdout)");
    addSeed(cmd);
    cmd->callback([&] {
      run = [&] {
        ExperimentSpec spec;
        spec.generatorType = type;
        spec.n = n;
        spec.p = p;
        spec.width = w;
        spec.height = h;
        spec.primeOrder = q;
        writeOut(outPath, graphToText(buildGeneratorGraph(spec, seed)));
        return kExitOk;
      };
    });
  }

  auto addDecomposeOut = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graphPath, "input graph file")->required();
    cmd->add_option("--out", outPath, "decomposition JSON output (default stdout)");
    addSeed(cmd);
  };

  {
    auto* cmd = app.add_subcommand("decompose", "randomized recursive decomposition");
    addDecomposeOut(cmd);
    cmd->add_option("--k", k, "recursion depth");
    cmd->add_option("--epsilon", epsilon, "palette exponent");
    cmd->add_option("--t", roundBudget, "reduction rounds (0 = until fixpoint)");
    cmd->add_option("--variant", variant, "threshold|always-random|always-linial");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        DecomposeOptions opt{k, epsilon, roundBudget, parseVariant(variant)};
        auto res = decompose(g, opt, cfg());
        writeOut(outPath, decompositionToJson(res.decomposition));
        return validateDecomposition(g, res.decomposition).passed ? kExitOk : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("rs-decompose", "ruling-set based decomposition");
    addDecomposeOut(cmd);
    cmd->add_option("--k", k, "recursion depth");
    cmd->add_option("--method", method, "luby-power|aglp-deterministic");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        RsDecomposeOptions opt;
        opt.k = k;
        opt.method = method == "luby-power" ? RulingMethod::LubyPower
                                            : RulingMethod::AglpDeterministic;
        auto res = rsDecompose(g, opt, cfg());
        writeOut(outPath, decompositionToJson(res.decomposition));
        return validateDecomposition(g, res.decomposition).passed ? kExitOk : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("sep-decompose", "sigma-separated decomposition");
    addDecomposeOut(cmd);
    cmd->add_option("--k", k, "recursion depth");
    cmd->add_option("--sigma", sigma, "separation (>= 2)");
    cmd->add_option("--epsilon", epsilon, "relabel exponent (<= 0: use 1/k)");
    cmd->add_option("--t", roundBudget, "reduction rounds (0 = until fixpoint)");
    cmd->add_option("--scheme", scheme, "h-random|arb-linial");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        SepDecomposeOptions opt;
        opt.k = k;
        opt.sigma = sigma;
        opt.epsilon = epsilon;
        opt.roundBudget = roundBudget;
        opt.scheme = scheme == "arb-linial" ? RelabelScheme::ArbLinial : RelabelScheme::HRandom;
        auto res = sepDecompose(g, opt, cfg());
        writeOut(outPath, decompositionToJson(res.decomposition));
        return validateDecomposition(g, res.decomposition).passed ? kExitOk : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("low-intersect", "low-intersecting partition");
    addDecomposeOut(cmd);
    cmd->add_option("--k", k, "recursion depth");
    cmd->add_option("--gamma", gamma, "ball radius");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        auto res = lowIntersecting(g, k, gamma, cfg());
        writeOut(outPath, decompositionToJson(res.source));
        return validateLowIntersecting(g, res).passed ? kExitOk : kExitValidation;
      };
    });
  }

  auto addJsonOut = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graphPath, "input graph file")->required();
    cmd->add_option("--json", outPath, "result JSON output (default stdout)");
    addSeed(cmd);
  };

  {
    auto* cmd = app.add_subcommand("color", "approximate minimum coloring");
    addJsonOut(cmd);
    cmd->add_option("--k", k, "recursion depth");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        auto res = approxMinColoring(g, k, cfg());
        int oracle = g.vertexCount() > 0 && g.vertexCount() <= kChromaticCap
                         ? bruteChromatic(g)
                         : -1;
        writeOut(outPath, coloringResultToJson(res, oracle));
        return isProperColoring(g, res.value) ? kExitOk : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("color-tf", "triangle-free coloring");
    addJsonOut(cmd);
    cmd->add_option("--epsilon", epsilon, "palette exponent");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        auto res = colorTriangleFree(g, epsilon, cfg());
        writeOut(outPath, coloringResultToJson(res, -1));
        return isProperColoring(g, res.value) ? kExitOk : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("color-girth", "high-girth coloring");
    addJsonOut(cmd);
    cmd->add_option("--girth", girthParam, "even girth bound 2k (graph girth must exceed it)");
    cmd->add_option("--epsilon", epsilon, "palette exponent");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        auto res = colorHighGirth(g, girthParam, epsilon, cfg());
        writeOut(outPath, coloringResultToJson(res, -1));
        return isProperColoring(g, res.value) ? kExitOk : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("mds", "approximate minimum dominating set");
    addJsonOut(cmd);
    cmd->add_option("--k", k, "recursion depth");
    cmd->add_option("--solver", solver, "exact|greedy");
    cmd->add_option("--pipeline", pipeline, "rand|det");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        auto res = approxMds(g, k, solver == "greedy" ? MdsSolver::Greedy : MdsSolver::Exact,
                             pipeline == "det" ? MdsPipeline::Deterministic
                                               : MdsPipeline::Randomized,
                             cfg());
        int oracle = g.vertexCount() <= kMdsCap ? bruteMds(g).size : -1;
        writeOut(outPath, mdsResultToJson(res, oracle));
        return kExitOk;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("spanner", "approximate minimum t-spanner");
    addJsonOut(cmd);
    cmd->add_option("--t", stretch, "stretch");
    cmd->add_option("--k", k, "recursion depth");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        auto res = approxTSpanner(g, stretch, k, cfg());
        int oracle = g.edgeCount() <= kSpannerCap ? bruteMinTSpanner(g, stretch).size : -1;
        writeOut(outPath, spannerResultToJson(res, oracle));
        return validateStretch(g, res.value.edges, stretch).report.passed ? kExitOk
                                                                          : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("verify", "validate a decomposition file");
    cmd->add_option("--graph", graphPath, "input graph file")->required();
    cmd->add_option("--decomposition", decompositionPath, "decomposition JSON")->required();
    cmd->add_option("--mode", mode, "strong|weak");
    cmd->callback([&] {
      run = [&] {
        Graph g = loadGraph();
        std::ifstream in(decompositionPath);
        if (!in) throw std::runtime_error("cannot open: " + decompositionPath);
        std::stringstream buf;
        buf << in.rdbuf();
        auto q = decompositionFromJson(buf.str());
        auto report = validateDecomposition(
            g, q, mode == "weak" ? DiameterMode::Weak : DiameterMode::Strong);
        std::cout << validationToJson(report) << '\n';
        return report.passed ? kExitOk : kExitValidation;
      };
    });
  }
  {
    auto* cmd = app.add_subcommand("experiment", "run a declarative experiment spec");
    cmd->add_option("--spec", specPath, "experiment spec JSON file")->required();
    cmd->add_flag("--full", full, "include decomposition payloads in the JSON output");
    cmd->callback([&] {
      run = [&] {
        std::ifstream in(specPath);
        if (!in) throw std::runtime_error("cannot open: " + specPath);
        std::stringstream buf;
        buf << in.rdbuf();
        auto spec = parseExperimentSpec(buf.str());
        if (full) spec.full = true;
        auto rows = runExperimentToFiles(spec);
        bool allValid = true;
        for (const auto& r : rows) allValid = allValid && r.validated;
        if (spec.csvPath.empty() && spec.jsonPath.empty()) std::cout << rowsToCsv(rows);
        return allValid ? kExitOk : kExitValidation;
      };
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return cli.run();
  } catch (const netdecomp::SizeCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
