#include "specrank/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "specrank/errors.hpp"

namespace specrank {

Graph::Graph(int node_count, std::vector<Arc> arcs) : n_(node_count), arcs_(std::move(arcs)) {
    if (n_ < 0) throw std::invalid_argument("negative node count");
    for (const Arc& a : arcs_)
        if (a.src < 0 || a.src >= n_ || a.dst < 0 || a.dst >= n_)
            throw std::out_of_range("arc endpoint out of range");
    out_begin_.assign(n_ + 1, 0);
    in_begin_.assign(n_ + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_begin_[a.src + 1];
        ++in_begin_[a.dst + 1];
    }
    for (int i = 0; i < n_; ++i) {
        out_begin_[i + 1] += out_begin_[i];
        in_begin_[i + 1] += in_begin_[i];
    }
    out_idx_.resize(arcs_.size());
    in_idx_.resize(arcs_.size());
    std::vector<int> op(out_begin_.begin(), out_begin_.end() - 1);
    std::vector<int> ip(in_begin_.begin(), in_begin_.end() - 1);
    for (int a = 0; a < arc_count(); ++a) {
        out_idx_[op[arcs_[a].src]++] = a;
        in_idx_[ip[arcs_[a].dst]++] = a;
    }
}

int Graph::out_degree(int i) const { return out_begin_[i + 1] - out_begin_[i]; }
int Graph::in_degree(int i) const { return in_begin_[i + 1] - in_begin_[i]; }

int Graph::multiplicity(int i, int j) const {
    int count = 0;
    for (int a : arcs_from(i))
        if (arcs_[a].dst == j) ++count;
    return count;
}

std::span<const int> Graph::arcs_from(int i) const {
    return {out_idx_.data() + out_begin_[i], out_idx_.data() + out_begin_[i + 1]};
}

std::span<const int> Graph::arcs_into(int i) const {
    return {in_idx_.data() + in_begin_[i], in_idx_.data() + in_begin_[i + 1]};
}

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [x, y] : edges) {
        if (x == y) throw invalid_edge_error("loop " + std::to_string(x) + "—" + std::to_string(y));
        if (x < 0 || y < 0 || x >= n_ || y >= n_)
            throw std::out_of_range("edge endpoint out of range");
        if (x > y) std::swap(x, y);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_begin_.assign(n_ + 1, 0);
    for (auto [x, y] : edges_) {
        ++adj_begin_[x + 1];
        ++adj_begin_[y + 1];
    }
    for (int i = 0; i < n_; ++i) adj_begin_[i + 1] += adj_begin_[i];
    adj_.resize(2 * edges_.size());
    std::vector<int> pos(adj_begin_.begin(), adj_begin_.end() - 1);
    for (auto [x, y] : edges_) {
        adj_[pos[x]++] = y;
        adj_[pos[y]++] = x;
    }
    for (int i = 0; i < n_; ++i)
        std::sort(adj_.begin() + adj_begin_[i], adj_.begin() + adj_begin_[i + 1]);
}

int UndirectedGraph::degree(int x) const {
    if (x < 0 || x >= n_) throw std::out_of_range("vertex out of range");
    return adj_begin_[x + 1] - adj_begin_[x];
}

bool UndirectedGraph::has_edge(int x, int y) const {
    if (x < 0 || y < 0 || x >= n_ || y >= n_) throw std::out_of_range("vertex out of range");
    auto nb = neighbors(x);
    return std::binary_search(nb.begin(), nb.end(), y);
}

std::span<const int> UndirectedGraph::neighbors(int x) const {
    return {adj_.data() + adj_begin_[x], adj_.data() + adj_begin_[x + 1]};
}

UndirectedGraph UndirectedGraph::with_edge(int x, int y) const {
    if (x == y) throw invalid_edge_error("loop " + std::to_string(x) + "—" + std::to_string(y));
    if (x < 0 || y < 0 || x >= n_ || y >= n_) throw std::out_of_range("vertex out of range");
    if (has_edge(x, y))
        throw invalid_edge_error("duplicate edge " + std::to_string(x) + "—" + std::to_string(y));
    std::vector<std::pair<int, int>> edges = edges_;
    edges.emplace_back(std::min(x, y), std::max(x, y));
    return UndirectedGraph(n_, std::move(edges));
}

Graph UndirectedGraph::directed_view() const {
    std::vector<Arc> arcs;
    arcs.reserve(2 * edges_.size());
    for (auto [x, y] : edges_) {
        arcs.push_back({x, y});
        arcs.push_back({y, x});
    }
    return Graph(n_, std::move(arcs));
}

WeightedGraph::WeightedGraph(Graph g, std::vector<BigRat> w)
    : graph(std::move(g)), weights(std::move(w)) {
    if (static_cast<int>(weights.size()) != graph.arc_count())
        throw std::invalid_argument("one weight per arc required");
}

WeightedGraph::WeightedGraph(Graph g)
    : graph(std::move(g)), weights(graph.arc_count(), BigRat(1)) {}

Matrix<BigRat> adjacency_matrix(const WeightedGraph& g) {
    const int n = g.graph.node_count();
    Matrix<BigRat> m(n, n);
    for (int a = 0; a < g.graph.arc_count(); ++a)
        m(g.graph.arc(a).src, g.graph.arc(a).dst) += g.weights[a];
    return m;
}

Matrix<BigRat> adjacency_matrix(const Graph& g) {
    const int n = g.node_count();
    Matrix<BigRat> m(n, n);
    for (const Arc& a : g.arcs()) m(a.src, a.dst) += 1;
    return m;
}

Matrix<double> adjacency_matrix_d(const WeightedGraph& g) {
    const int n = g.graph.node_count();
    Matrix<double> m(n, n);
    for (int a = 0; a < g.graph.arc_count(); ++a)
        m(g.graph.arc(a).src, g.graph.arc(a).dst) += rat_to_double(g.weights[a]);
    return m;
}

WeightedGraph row_normalize(const UndirectedGraph& g) {
    Graph d = g.directed_view();
    std::vector<BigRat> w(d.arc_count());
    for (int a = 0; a < d.arc_count(); ++a) w[a] = BigRat(1, d.out_degree(d.arc(a).src));
    return WeightedGraph(std::move(d), std::move(w));
}

UndirectedGraph load_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    long line_no = 0;
    long declared_n = -1;
    long max_id = -1;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        if (line[start] == '%') {
            std::string directive;
            ls >> directive;
            if (directive != "%n") throw parse_error("unknown directive '" + directive + "'", line_no);
            long n;
            if (!(ls >> n) || n < 0) throw parse_error("bad %n count", line_no);
            declared_n = std::max(declared_n, n);
            continue;
        }
        long x, y;
        std::string extra;
        if (!(ls >> x >> y) || (ls >> extra))
            throw parse_error("expected two vertex ids", line_no);
        if (x < 0 || y < 0) throw parse_error("negative vertex id", line_no);
        if (x == y)
            throw invalid_edge_error("line " + std::to_string(line_no) + ": loop " +
                                     std::to_string(x) + "—" + std::to_string(y));
        edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
        max_id = std::max({max_id, x, y});
    }
    long n = std::max(declared_n, max_id + 1);
    return UndirectedGraph(static_cast<int>(n), std::move(edges));
}

void save_edge_list(const UndirectedGraph& g, std::ostream& out) {
    out << "%n " << g.vertex_count() << "\n";
    for (auto [x, y] : g.edges()) out << x << " " << y << "\n";
}

UndirectedGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return load_edge_list(in);
}

void save_edge_list_file(const UndirectedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    save_edge_list(g, out);
}

}  // namespace specrank
