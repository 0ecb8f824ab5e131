#include "specrank/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "specrank/errors.hpp"

namespace specrank {

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, ptr);
}

ojson to_json(const Verdict& v) {
    ojson j;
    j["edge"] = {v.x, v.y};
    j["centrality"] = v.centrality;
    j["score"] = {{"x_before", v.x_before},
                  {"x_after", v.x_after},
                  {"y_before", v.y_before},
                  {"y_after", v.y_after},
                  {"monotone", to_string(v.score_monotone)}};
    j["rank"] = {{"monotone", to_string(v.rank_monotone)}};
    ojson entries = ojson::array();
    for (const auto& e : v.rank_violations) {
        entries.push_back({{"endpoint", e.endpoint},
                           {"z", e.z},
                           {"before_endpoint", e.before_endpoint},
                           {"before_z", e.before_z},
                           {"after_endpoint", e.after_endpoint},
                           {"after_z", e.after_z},
                           {"strict_only", e.strict_only}});
    }
    j["rank"]["violations"] = std::move(entries);
    j["exact_verified"] = v.exact_verified;
    if (!v.exact_verified && !std::isinf(v.min_margin)) j["min_margin"] = v.min_margin;
    return j;
}

ojson to_json(const ScanResult& r) {
    ojson j;
    j["checked"] = r.checked;
    j["violations"] = ojson::array();
    for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
    j["violation_count"] = r.violations.size();
    j["violation_rate"] = r.violation_rate();
    j["both_hurt"] = r.both_hurt;
    return j;
}

ojson to_json(const GapAnalysis& g) {
    ojson j;
    j["sign_at_2_3"] = g.sign_at_2_3;
    j["zero_at_0"] = g.zero_at_0;
    j["zero_at_1"] = g.zero_at_1;
    j["roots_open_unit"] = g.roots_open_unit;
    j["roots_closed_unit"] = g.roots_closed_unit;
    j["a"] = rat_to_string(g.a);
    j["b"] = rat_to_string(g.b);
    j["roots_low_halfopen"] = g.roots_low_halfopen;
    j["roots_low_closed"] = g.roots_low_closed;
    j["roots_high_halfopen"] = g.roots_high_halfopen;
    j["roots_high_closed"] = g.roots_high_closed;
    j["numerator"] = g.numerator.to_strings();
    return j;
}

ojson to_json(const ScoreTheoremReport& r) {
    ojson j;
    j["k"] = r.k;
    j["theorem"] = "score";
    j["gap"] = to_json(r.score);
    j["core_holds"] = r.core_holds;
    j["bracket_holds"] = r.bracket_holds;
    j["matches_expected"] = r.matches_expected;
    j["below_threshold"] = r.below_threshold;
    return j;
}

ojson to_json(const RankTheoremReport& r) {
    ojson j;
    j["k"] = r.k;
    j["theorem"] = "rank";
    j["dashed_edge"] = r.dashed_edge;
    j["pre_gap"] = to_json(r.pre);
    j["post_gap"] = to_json(r.post);
    j["pre_holds"] = r.pre_holds;
    j["post_core_holds"] = r.post_core_holds;
    j["post_bracket_holds"] = r.post_bracket_holds;
    j["pre_matches"] = r.pre_matches;
    j["post_matches"] = r.post_matches;
    j["below_threshold"] = r.below_threshold;
    return j;
}

ojson score_to_json(const ScoreVector& s) {
    ojson j;
    j["tag"] = s.tag;
    j["values"] = s.values;
    return j;
}

ojson score_to_json(const ExactScoreVector& s) {
    ojson j;
    j["tag"] = s.tag;
    ojson vals = ojson::array();
    for (const auto& q : s.values) vals.push_back(rat_to_string(q));
    j["values"] = std::move(vals);
    return j;
}

std::string score_to_csv(const ScoreVector& s) {
    std::ostringstream os;
    os << "vertex,score\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        os << i << "," << format_double(s.values[i]) << "\n";
    return os.str();
}

std::string score_to_csv(const ExactScoreVector& s) {
    std::ostringstream os;
    os << "vertex,score\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        os << i << "," << rat_to_string(s.values[i]) << "\n";
    return os.str();
}

ojson graph_to_json(const Graph& g, const std::vector<BigRat>* weights) {
    ojson j;
    j["n"] = g.node_count();
    ojson arcs = ojson::array();
    for (const Arc& a : g.arcs()) arcs.push_back({a.src, a.dst});
    j["arcs"] = std::move(arcs);
    if (weights) {
        ojson w = ojson::array();
        for (const auto& q : *weights) w.push_back(rat_to_string(q));
        j["weights"] = std::move(w);
    }
    return j;
}

Graph graph_from_json(const ojson& j, std::vector<BigRat>* weights_out) {
    if (!j.contains("n") || !j.contains("arcs")) throw parse_error("graph JSON needs n and arcs");
    std::vector<Arc> arcs;
    for (const auto& a : j["arcs"]) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    Graph g(j["n"].get<int>(), std::move(arcs));
    if (weights_out) {
        weights_out->clear();
        if (j.contains("weights"))
            for (const auto& w : j["weights"])
                weights_out->push_back(rat_from_string(w.get<std::string>()));
    }
    return g;
}

ojson morphism_to_json(const GraphMorphism& f) {
    ojson j;
    j["node_map"] = f.node_map;
    j["arc_map"] = f.arc_map;
    return j;
}

GraphMorphism morphism_from_json(const ojson& j, Graph total, Graph base,
                                 std::vector<BigRat> total_weights,
                                 std::vector<BigRat> base_weights) {
    GraphMorphism f;
    f.total = std::move(total);
    f.base = std::move(base);
    if (!j.contains("node_map")) throw parse_error("morphism JSON needs node_map");
    f.node_map = j["node_map"].get<std::vector<int>>();
    if (j.contains("arc_map") && !j["arc_map"].empty()) {
        f.arc_map = j["arc_map"].get<std::vector<int>>();
    } else {
        f.arc_map = infer_arc_map(f.total, f.base, f.node_map);
    }
    f.total_weights = std::move(total_weights);
    f.base_weights = std::move(base_weights);
    f.validate();
    return f;
}

}  // namespace specrank
