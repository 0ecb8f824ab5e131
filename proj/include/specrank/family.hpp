#pragma once

#include <string>
#include <vector>

#include "specrank/fibration.hpp"
#include "specrank/graph.hpp"
#include "specrank/rational_function.hpp"

namespace specrank {

/// The parametric counterexample pair: a (2k+4)-vertex undirected graph made
/// of two k-cliques joined by short paths, and its 9-node weighted quotient.
/// The studied edge addition joins the pendant vertex (fiber 5) to the
/// distinguished second-clique vertex (fiber 7).
struct FamilyInstance {
    int k;
    UndirectedGraph g_pre, g_post;
    WeightedGraph b_pre, b_post;
    GraphMorphism fib_pre, fib_post;
    std::vector<BigRat> u;  // projected uniform preference on the base
};

/// 9-node weighted base; entry-for-entry the quotient of the row-normalized
/// total graph. Requires k >= 4.
WeightedGraph build_base(int k, bool with_edge);

/// (2k+4)-vertex total graph. The construction is validated on every call:
/// its weighted quotient must reproduce build_base(k, with_edge) exactly.
UndirectedGraph build_total(int k, bool with_edge);

/// Epimorphic weight-preserving fibration from the row-normalized total
/// graph onto the base.
GraphMorphism family_fibration(int k, bool with_edge);

FamilyInstance make_family_instance(int k);

std::vector<int> family_fiber_sizes(int k);

/// Vertex ids of the studied edge inside the total graph (pendant, clique
/// vertex), and the rank-comparison vertex of fiber 2.
std::pair<int, int> family_dashed_edge(int k);
int family_fiber2_vertex(int k);

/// The nine PageRank values of the total graph as exact rational functions
/// of the damping factor: (1-a) u (I - a B)^{-1} entry by entry, computed
/// over the rational-function field. Entry j is the value shared by every
/// vertex of fiber j. Results are memoized per (k, with_edge).
std::vector<RationalFunction> symbolic_pagerank(int k, bool with_edge);

/// Interval root counts of one comparison numerator. "low"/"high" refer to
/// the bracketing points a and b; half-open counts exclude the outer
/// endpoints 0 and 1, closed counts include them.
struct GapAnalysis {
    int sign_at_2_3;          // sign of the rational function at alpha = 2/3
    bool zero_at_0, zero_at_1;
    int roots_open_unit;      // (0,1)
    int roots_closed_unit;    // [0,1]
    int roots_low_halfopen;   // (0, a]
    int roots_low_closed;     // [0, a]
    int roots_high_halfopen;  // [b, 1)
    int roots_high_closed;    // [b, 1]
    BigRat a, b;
    Polynomial numerator;
};

GapAnalysis analyze_gap(const RationalFunction& gap, const BigRat& a, const BigRat& b);

struct ScoreTheoremReport {
    int k;
    GapAnalysis score;  // post(5) - pre(5), bracket a = 3/4 - 3k/(4k+1000),
                        // b = 1/2 + k/(2k+1000)
    bool core_holds;     // negative at 2/3 with two crossings in (0,1)
    bool bracket_holds;  // one crossing in (0,a], one in [b,1)
    bool matches_expected;  // core claimed from k >= 12, bracket from k >= 15
    bool below_threshold;   // k < 12: no pattern is claimed
};

struct RankTheoremReport {
    int k;
    GapAnalysis pre;    // pre(5) - pre(2), bracket 3/4 - 3k/(4k+200) / 1/2 + k/(2k+200)
    GapAnalysis post;   // post(5) - post(2), bracket 1/10 - k/(10k+2000) / 1/2 + k/(2k+200)
    std::string dashed_edge;   // which edge addition was analyzed
    bool pre_holds;            // positive at 2/3, two crossings in (0,1)
    bool post_core_holds;      // negative at 2/3, three roots in [0,1]
    bool post_bracket_holds;   // two roots in [0,a], one in [b,1]
    bool pre_matches;          // pre pattern claimed from k >= 14
    bool post_matches;         // post core from k >= 6, bracket from k >= 25
    bool below_threshold;
};

ScoreTheoremReport verify_score_theorem(int k);
RankTheoremReport verify_rank_theorem(int k);

/// Exact residual of the parametric solve behind symbolic_pagerank:
/// largest entry of x (I - a B) - u, which must be identically zero.
RationalFunction symbolic_solve_residual(int k, bool with_edge);

}  // namespace specrank
