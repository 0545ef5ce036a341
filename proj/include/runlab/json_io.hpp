#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "runlab/adversarial.hpp"
#include "runlab/bounds.hpp"
#include "runlab/coloring.hpp"
#include "runlab/debruijn.hpp"
#include "runlab/grid_function.hpp"
#include "runlab/monte_carlo.hpp"
#include "runlab/run_prob.hpp"

namespace runlab {

using Json = nlohmann::json;

// integers that can exceed 64 bits travel as decimal strings,
// rationals as exact "p/q" (or plain "p" when the denominator is one)
std::string to_decimal_string(const BigInt& v);
std::string to_fraction_string(const Rat& v);
BigInt bigint_from_string(const std::string& s);
Rat rat_from_string(const std::string& s);

Json graph_summary_json(const DeBruijnGraph& g);
std::string edge_list_csv(const DeBruijnGraph& g);

Json coloring_json(const VertexColoring& vc);
VertexColoring coloring_from_json(const Json& j);

Json grid_function_json(const GridFunction& f);
GridFunction grid_function_from_json(const Json& j);

Json run_report_json(const RunReport& r);
Json mc_estimate_json(const MCEstimate& e);
Json path_json(const DirectedPath& p, const DeBruijnGraph& g);
Json chvatal_report_json(const ChvatalReport& r);
Json search_result_json(const SearchResult& r);
Json bridge_report_json(const BridgeReport& r);
Json adversarial_min_json(const AdversarialMin& r);
Json lower_bound_report_json(const LowerBoundReport& r);
Json impossibility_report_json(const ImpossibilityReport& r);
Json distinctness_report_json(const DistinctnessReport& r);
Json tower_value_json(const TowerValue& t);
Json bound_report_json(const BoundReport& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace runlab
