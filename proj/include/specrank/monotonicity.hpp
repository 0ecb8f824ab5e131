#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "specrank/centrality.hpp"
#include "specrank/graph.hpp"
#include "specrank/rational.hpp"

namespace specrank {

enum class ScoreMono { Strict, Weak, Violated };
enum class RankMono { Strict, Plain, Violated };

std::string to_string(ScoreMono m);
std::string to_string(RankMono m);

struct RankViolationEntry {
    int endpoint, z;
    double before_endpoint, before_z, after_endpoint, after_z;
    bool strict_only;  // conclusion was equality: only the strict flavor breaks
};

/// Outcome of one edge-addition check.
struct Verdict {
    int x = -1, y = -1;
    std::string centrality;
    double x_before = 0, x_after = 0, y_before = 0, y_after = 0;
    ScoreMono score_monotone = ScoreMono::Strict;
    RankMono rank_monotone = RankMono::Strict;
    std::vector<RankViolationEntry> rank_violations;
    bool exact_verified = false;  // all comparisons settled in exact arithmetic
    /// Smallest |delta| backing a reported violation when only floating
    /// arithmetic was available; +inf when exact or when nothing violated.
    double min_margin = std::numeric_limits<double>::infinity();

    bool both_endpoints_dropped() const {
        return x_after < x_before && y_after < y_before;
    }
};

/// A centrality packaged for checking: a floating path at a chosen tolerance
/// and, when the measure admits one, an exact rational path. `certified`
/// is an optional cheaper exact authority (floats with a proved error
/// bound); it may decline a particular graph by returning nullopt.
struct CentralityOracle {
    std::string tag;
    std::function<std::vector<double>(const UndirectedGraph&, double tol)> score;
    std::function<std::vector<BigRat>(const UndirectedGraph&)> exact;  // may be empty
    std::function<std::optional<CertifiedScores>(const UndirectedGraph&)> certified;
};

CentralityOracle make_seeley_oracle();
CentralityOracle make_pagerank_oracle(const BigRat& alpha);
CentralityOracle make_eigenvector_oracle(EigenNorm norm);

struct CheckOptions {
    double tol = 1e-12;         // floating computation tolerance
    double band = 1e-9;         // |delta| below this is "maybe equal"
    double refine_tol = 1e-14;  // second-pass tolerance without an exact path
    double refine_band = 1e-12;
    bool force_exact = false;   // settle every comparison exactly when possible
};

/// Checks score and rank monotonicity of adding x—y under the oracle.
/// Ambiguous comparisons (and any comparison backing a violation) are
/// re-settled exactly when the oracle has an exact path, or at refine_tol
/// otherwise, so reported violations are never floating-point artifacts.
Verdict check_edge(const CentralityOracle& oracle, const UndirectedGraph& g, int x, int y,
                   const CheckOptions& opts = {});

struct SamplerConfig {
    enum class Kind { Random, Stratified };
    Kind kind = Kind::Random;
    std::uint64_t seed = 0;
    double top_fraction = 1.0 / 10000.0;  // importance stratum, by the oracle itself
    double bottom_fraction = 0.25;
};

struct ScanResult {
    long long checked = 0;
    std::vector<Verdict> violations;  // sorted by pair for reproducibility
    long long both_hurt = 0;          // cases where both endpoints lost score
    double violation_rate() const { return checked ? double(violations.size()) / checked : 0.0; }
};

/// Samples non-adjacent pairs and returns the violating verdicts. With a
/// fixed seed the report is identical across runs and thread counts.
ScanResult scan_graph(const CentralityOracle& oracle, const UndirectedGraph& g,
                      const SamplerConfig& sampler, long long budget,
                      const CheckOptions& opts = {}, bool parallel = true);

enum class Axiom { ScoreWeak, Score, Rank, RankStrict };

std::string to_string(Axiom a);

struct Counterexample {
    UndirectedGraph graph;
    int x, y;
    Verdict verdict;
};

struct SearchOptions {
    double margin = 1e-6;  // required violation size for float-only oracles
    bool dedup = true;     // skip heuristically-canonical duplicates
    bool parallel = true;
    CheckOptions check;
};

/// Enumerates all graphs with up to max_vertices vertices (at most 8) in a
/// fixed order and returns the first edge addition violating the axiom.
std::optional<Counterexample> search_counterexample(const CentralityOracle& oracle,
                                                    int max_vertices, Axiom axiom,
                                                    bool connected_only,
                                                    const SearchOptions& opts = {});

enum class AlphaFlavor { RankStrict, Score };

/// Smallest probe alpha_j = 1 - 2^-j (j <= 60) at which adding x—y is, by
/// exact PageRank, strictly rank monotone / strictly score increasing.
/// Star-plus-isolated graphs are rejected for the score flavor.
BigRat find_monotone_alpha(const UndirectedGraph& g, int x, int y, AlphaFlavor flavor);

struct SeeleyAuditResult {
    long long graphs = 0;
    long long checks = 0;
    long long rank_not_strict = 0;   // degree index must be strictly rank monotone
    long long score_violations = 0;  // must be zero
    long long weak_cases = 0;        // score equality cases observed
    long long weak_mismatches = 0;   // equality without a star-center endpoint,
                                     // or a star-center endpoint without equality
    bool clean() const {
        return rank_not_strict == 0 && score_violations == 0 && weak_mismatches == 0;
    }
};

/// Exhaustive sweep of every graph on exactly n labeled vertices and every
/// addable edge under the degree index. Serial and parallel runs produce
/// identical counters.
SeeleyAuditResult audit_seeley_monotonicity(int n, bool parallel = true);

}  // namespace specrank
