#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "specrank/matrix.hpp"
#include "specrank/rational.hpp"

namespace specrank {

struct Arc {
    int src = 0;
    int dst = 0;
    bool operator==(const Arc&) const = default;
};

/// Directed multigraph on nodes 0..n-1. Parallel arcs and loops are allowed;
/// multiplicity is repetition in the arc sequence. Immutable once built.
class Graph {
public:
    Graph() = default;
    Graph(int node_count, std::vector<Arc> arcs);

    int node_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int a) const { return arcs_[a]; }

    int out_degree(int i) const;
    int in_degree(int i) const;

    /// |G(i,j)|: number of arcs from i to j.
    int multiplicity(int i, int j) const;

    /// Indices of arcs with source i.
    std::span<const int> arcs_from(int i) const;
    /// Indices of arcs with target i.
    std::span<const int> arcs_into(int i) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> out_begin_, out_idx_;  // CSR by source
    std::vector<int> in_begin_, in_idx_;    // CSR by target
};

/// Simple undirected graph: no loops, no duplicate edges; vertices 0..n-1
/// (isolated vertices are representable). Immutable.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    /// Edges are normalized to (min,max) and deduplicated; loops are rejected.
    UndirectedGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int x) const;
    bool has_edge(int x, int y) const;
    std::span<const int> neighbors(int x) const;

    /// Copy of this graph with the extra edge x—y; rejects loops and
    /// duplicates with invalid_edge_error.
    UndirectedGraph with_edge(int x, int y) const;

    /// Directed view: one arc in each direction per edge.
    Graph directed_view() const;

    bool operator==(const UndirectedGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_begin_, adj_;
};

inline UndirectedGraph add_edge(const UndirectedGraph& g, int x, int y) {
    return g.with_edge(x, y);
}

/// Graph plus one exact weight per arc; the adjacency entry (i,j) is the
/// weight sum over parallel arcs.
struct WeightedGraph {
    Graph graph;
    std::vector<BigRat> weights;

    WeightedGraph() = default;
    WeightedGraph(Graph g, std::vector<BigRat> w);
    /// All weights 1.
    explicit WeightedGraph(Graph g);
};

Matrix<BigRat> adjacency_matrix(const WeightedGraph& g);
Matrix<BigRat> adjacency_matrix(const Graph& g);  // multiplicities
Matrix<double> adjacency_matrix_d(const WeightedGraph& g);

/// Weighted directed view with arc weights 1/outdegree(source); rows of
/// isolated vertices stay all-zero.
WeightedGraph row_normalize(const UndirectedGraph& g);

/// Text edge list: "i j" per line, '#' comments and blank lines ignored,
/// optional "%n <count>" raises the vertex count beyond 1+max id.
UndirectedGraph load_edge_list(std::istream& in);
void save_edge_list(const UndirectedGraph& g, std::ostream& out);

UndirectedGraph load_edge_list_file(const std::string& path);
void save_edge_list_file(const UndirectedGraph& g, const std::string& path);

}  // namespace specrank
