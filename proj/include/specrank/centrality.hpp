#pragma once

#include <string>
#include <vector>

#include "specrank/graph.hpp"
#include "specrank/rational.hpp"

namespace specrank {

/// One score per vertex plus a tag recording the producing centrality and
/// its parameters.
struct ScoreVector {
    std::vector<double> values;
    std::string tag;
};

struct ExactScoreVector {
    std::vector<BigRat> values;
    std::string tag;
};

enum class EigenNorm { L1, L2, ProjectOnes };

std::string to_string(EigenNorm n);

struct PowerOptions {
    double tol = 1e-12;
    long max_iter = 1'000'000;
    bool parallel = true;  // row-parallel products; reductions stay serial,
                           // so results are identical for any thread count
};

/// l1-normalized degree d(x)/2m. Undefined (throws) on edgeless graphs.
ScoreVector seeley(const UndirectedGraph& g);
ExactScoreVector seeley_exact(const UndirectedGraph& g);

/// Dominant eigenvector of the adjacency matrix by power iteration on the
/// shifted matrix A+I (safe on bipartite graphs), scaled per the requested
/// normalization. When two components tie for the dominant eigenvalue the
/// tag gains a ";degenerate-dominant" marker.
ScoreVector eigenvector_centrality(const UndirectedGraph& g, EigenNorm norm,
                                   PowerOptions opts = {});

/// PageRank with damping alpha and preference v (uniform when empty).
/// Rows of isolated vertices stay null during iteration; the result is
/// l1-normalized afterwards.
ScoreVector pagerank(const UndirectedGraph& g, double alpha,
                     const std::vector<double>& v = {}, PowerOptions opts = {});

/// Exact PageRank: solves r (I - alpha G_rownorm) = (1-alpha) v and
/// l1-normalizes when isolated vertices exist.
ExactScoreVector pagerank_exact(const UndirectedGraph& g, const BigRat& alpha,
                                const std::vector<BigRat>& v = {});

/// Floating scores together with a proved bound on each entry's distance
/// from the exact value: any comparison whose gap clears twice the bound is
/// an exact fact without solving the rational system.
struct CertifiedScores {
    std::vector<double> values;
    double max_abs_error;
};

/// PageRank with an exact residual-based error certificate: the iterate r
/// satisfies |r_i - exact_i| <= ||r(I-aW) - (1-a)v||_1 / (1-a), with the
/// residual evaluated in rational arithmetic. Requires a graph without
/// isolated vertices (no l1 renormalization step to track).
CertifiedScores pagerank_certified(const UndirectedGraph& g, const BigRat& alpha,
                                   PowerOptions opts = {});

/// Damped spectral ranking v (I - beta M)^{-1} for the weighted adjacency
/// matrix M. Checks beta against a power-iteration estimate of the spectral
/// radius (1% safety margin). Katz's index is the all-ones-preference,
/// unit-weight instance.
ScoreVector damped_spectral(const WeightedGraph& g, double beta,
                            const std::vector<double>& v, PowerOptions opts = {});

/// Exact variant: direct solve, defined whenever I - beta M is nonsingular.
ExactScoreVector damped_spectral_exact(const WeightedGraph& g, const BigRat& beta,
                                       const std::vector<BigRat>& v);

/// Largest-magnitude eigenvalue estimate of the weighted adjacency matrix.
double spectral_radius_estimate(const WeightedGraph& g, long iters = 200);

/// Connected components as a vertex->component map (component ids dense).
std::vector<int> connected_components(const UndirectedGraph& g, int* count = nullptr);

}  // namespace specrank
