#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specrank/graph.hpp"
#include "specrank/matrix.hpp"
#include "specrank/rational.hpp"

namespace specrank {

/// Node and arc maps from a total graph to a base graph, commuting with
/// source and target. Arc maps are stored explicitly: with parallel arcs
/// they cannot be inferred from the node map alone. Optional weights make
/// the morphism weight-preserving (checked on validation).
struct GraphMorphism {
    Graph total;
    Graph base;
    std::vector<int> node_map;  // size = total.node_count()
    std::vector<int> arc_map;   // size = total.arc_count()
    std::vector<BigRat> total_weights;  // empty = unweighted
    std::vector<BigRat> base_weights;

    bool weighted() const { return !total_weights.empty(); }

    /// Throws morphism_error if sizes disagree, maps leave range, the maps
    /// fail to commute with incidence, or weights are not preserved.
    void validate() const;
};

struct FibrationWitness {
    int base_arc;
    int node;     // total-graph node over the arc's target
    int count;    // liftings found (must be exactly 1)
};

struct FibrationCheck {
    bool ok;
    std::optional<FibrationWitness> witness;
};

/// Unique-lifting test: every base arc has exactly one counterimage ending
/// at every node over its target.
FibrationCheck is_fibration(const GraphMorphism& f);

bool is_epimorphic(const GraphMorphism& f);

/// Nodes of the total graph mapped to base node h.
std::vector<int> fiber(const GraphMorphism& f, int h);

template <typename T>
std::vector<T> lift_vector(const std::vector<T>& u, const GraphMorphism& f) {
    if (static_cast<int>(u.size()) != f.base.node_count())
        throw std::invalid_argument("vector length != base node count");
    std::vector<T> out(f.node_map.size());
    for (std::size_t i = 0; i < f.node_map.size(); ++i) out[i] = u[f.node_map[i]];
    return out;
}

/// Fills in the arc map when it is forced by the node map (i.e. no parallel
/// base arcs between any mapped pair); throws morphism_error otherwise.
std::vector<int> infer_arc_map(const Graph& total, const Graph& base,
                               const std::vector<int>& node_map);

struct QuotientIdentityResult {
    bool holds;
    BigRat max_deviation;           // exact mode
    double max_deviation_float;     // float mode
};

/// Compares u^f (I - beta G)^{-1} against the lifting of u (I - beta B)^{-1},
/// both computed exactly. Requires an epimorphic fibration.
QuotientIdentityResult verify_quotient_identity_exact(const GraphMorphism& f,
                                                      const BigRat& beta,
                                                      const std::vector<BigRat>& u);

/// Same comparison in floating point; passes when the max deviation < 1e-9.
QuotientIdentityResult verify_quotient_identity_float(const GraphMorphism& f, double beta,
                                                      const std::vector<double>& u);

/// Weighted quotient matrix: entry (h, j) sums the total-graph weights of
/// arcs from fiber(h) into one representative of fiber(j). Throws
/// morphism_error if the sum depends on the representative (the partition
/// is not equitable, so no fibration can exist).
Matrix<BigRat> quotient_matrix(const Graph& total, const std::vector<BigRat>& weights,
                               int base_nodes, const std::vector<int>& node_map);

/// Exact weighted path census: sum over all paths of the given length from
/// any source in `sources` to `target` of the product of arc weights.
BigRat path_weight_sum(const Graph& g, const std::vector<BigRat>& weights,
                       const std::vector<int>& sources, int target, int length);

}  // namespace specrank
