#pragma once

#include <json.hpp>

#include <string>

#include "specrank/centrality.hpp"
#include "specrank/family.hpp"
#include "specrank/fibration.hpp"
#include "specrank/monotonicity.hpp"

namespace specrank {

using ojson = nlohmann::ordered_json;

ojson to_json(const Verdict& v);
ojson to_json(const ScanResult& r);
ojson to_json(const GapAnalysis& g);
ojson to_json(const ScoreTheoremReport& r);
ojson to_json(const RankTheoremReport& r);

ojson score_to_json(const ScoreVector& s);
ojson score_to_json(const ExactScoreVector& s);
std::string score_to_csv(const ScoreVector& s);
std::string score_to_csv(const ExactScoreVector& s);

/// {"n": ..., "arcs": [[s,t],...], "weights": ["p/q",...]?}
ojson graph_to_json(const Graph& g, const std::vector<BigRat>* weights = nullptr);
Graph graph_from_json(const ojson& j, std::vector<BigRat>* weights_out = nullptr);

/// {"node_map": [...], "arc_map": [...]}; graphs travel separately.
ojson morphism_to_json(const GraphMorphism& f);
GraphMorphism morphism_from_json(const ojson& j, Graph total, Graph base,
                                 std::vector<BigRat> total_weights = {},
                                 std::vector<BigRat> base_weights = {});

std::string format_double(double x);

}  // namespace specrank
