#pragma once

#include <string>

#include "netdecomp/applications.hpp"
#include "netdecomp/coloring.hpp"
#include "netdecomp/decompose.hpp"
#include "netdecomp/sim.hpp"
#include "netdecomp/validate.hpp"

namespace netdecomp {

// JSON wire formats. All serializers emit stable key order and complete
// objects, so equal inputs yield byte-identical text.

/// {"entries":[{"phase","base","multiplier","charged"},...],"total":N}
std::string ledgerToJson(const RoundLedger& ledger);

/// {"palette":P,"colors":[[v,c],...]}
std::string coloringToJson(const Coloring& c);

/// {"cert":{"d","l","sigma"},"realizedDom":R,"clusters":[{"label","leader","members"},...]}
std::string decompositionToJson(const NetworkDecomposition& q);
NetworkDecomposition decompositionFromJson(const std::string& text);

/// {"passed":bool,"violations":[{"rule","witness"},...]}
std::string validationToJson(const ValidationReport& report);

std::string mdsResultToJson(const ApproxResult<VertexSet>& r, int oracleOptimum);
std::string coloringResultToJson(const ApproxResult<Coloring>& r, int oracleOptimum);
std::string spannerResultToJson(const ApproxResult<SpannerValue>& r, int oracleOptimum);

}  // namespace netdecomp
