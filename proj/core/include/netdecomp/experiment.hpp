#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdecomp/graph.hpp"
#include "netdecomp/sim.hpp"

namespace netdecomp {

/**
   A declarative experiment: one generator, one algorithm, a list of seeds.
   Parsed from JSON; see README for the schema.
 */
struct ExperimentSpec {
  std::string generatorType;  // gnp | cycle | path | star | grid | girth6 | random-tree
  int n = 0;
  double p = 0;
  int width = 0, height = 0;
  int primeOrder = 0;

  std::string algorithm;  // decompose | rs-decompose | sep-decompose | low-intersect |
                          // mds | color | color-tf | color-girth | spanner
  int k = 2;
  double epsilon = 0.5;
  int roundBudget = kUntilFixpoint;
  std::string variant = "threshold";
  std::string method = "aglp-deterministic";
  std::string solver = "exact";
  std::string pipeline = "rand";
  int sigma = 3;
  int gamma = 1;
  int stretch = 2;
  int girthParam = 4;

  std::vector<std::uint64_t> seeds;
  std::string csvPath;
  std::string jsonPath;
  bool full = false;  // JSON additionally carries the full decomposition payloads
};

ExperimentSpec parseExperimentSpec(const std::string& jsonText);

/// One metrics row per (generator, seed). ratioVsOracle is empty when the
/// instance exceeds the oracle caps.
struct ExperimentRow {
  std::string generator;
  std::uint64_t seed = 0;
  int n = 0;
  long m = 0;
  std::string algorithm;
  int k = 0;
  double epsilon = 0;
  int sigma = 0;
  int labelCount = 0;
  int maxClusterDiam = 0;
  std::int64_t rounds = 0;
  std::string ratioVsOracle;
  bool validated = false;
  double wallMs = 0;        // JSON only; the CSV stays byte-stable
  std::string payload;      // full decomposition JSON when spec.full
};

Graph buildGeneratorGraph(const ExperimentSpec& spec, std::uint64_t seed);

std::vector<ExperimentRow> runExperiment(const ExperimentSpec& spec);

/// Fixed column order:
/// generator,seed,n,m,algorithm,k,epsilon,sigma,labelCount,maxClusterDiam,rounds,ratioVsOracle,validated
std::string rowsToCsv(const std::vector<ExperimentRow>& rows);
std::string rowsToJson(const ExperimentSpec& spec, const std::vector<ExperimentRow>& rows);

/// Runs the experiment and writes csvPath / jsonPath as configured.
std::vector<ExperimentRow> runExperimentToFiles(const ExperimentSpec& spec);

}  // namespace netdecomp
