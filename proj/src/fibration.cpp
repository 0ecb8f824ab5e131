#include "specrank/fibration.hpp"

#include <algorithm>
#include <cmath>

#include "specrank/errors.hpp"
#include "specrank/linear_solve.hpp"

namespace specrank {

void GraphMorphism::validate() const {
    if (static_cast<int>(node_map.size()) != total.node_count())
        throw morphism_error("node map size != total node count");
    if (static_cast<int>(arc_map.size()) != total.arc_count())
        throw morphism_error("arc map size != total arc count");
    for (int v : node_map)
        if (v < 0 || v >= base.node_count()) throw morphism_error("node map leaves base");
    for (int a : arc_map)
        if (a < 0 || a >= base.arc_count()) throw morphism_error("arc map leaves base");
    for (int a = 0; a < total.arc_count(); ++a) {
        const Arc& ta = total.arc(a);
        const Arc& ba = base.arc(arc_map[a]);
        if (ba.src != node_map[ta.src] || ba.dst != node_map[ta.dst])
            throw morphism_error("arc " + std::to_string(a) +
                                 " does not commute with source/target");
    }
    if (!total_weights.empty() || !base_weights.empty()) {
        if (static_cast<int>(total_weights.size()) != total.arc_count() ||
            static_cast<int>(base_weights.size()) != base.arc_count())
            throw morphism_error("weight vectors must cover all arcs of both graphs");
        for (int a = 0; a < total.arc_count(); ++a)
            if (total_weights[a] != base_weights[arc_map[a]])
                throw morphism_error("arc " + std::to_string(a) + " does not preserve weight");
    }
}

FibrationCheck is_fibration(const GraphMorphism& f) {
    f.validate();
    // liftings[(base arc, target node)] counts counterimages ending there
    const int nb_arcs = f.base.arc_count();
    std::vector<std::vector<int>> count(nb_arcs);
    for (int a = 0; a < nb_arcs; ++a) count[a] = {};

    std::vector<std::vector<int>> fibers(f.base.node_count());
    for (std::size_t i = 0; i < f.node_map.size(); ++i)
        fibers[f.node_map[i]].push_back(static_cast<int>(i));

    // local index of each total node within its fiber
    std::vector<int> local(f.node_map.size());
    for (auto& fib : fibers)
        for (std::size_t i = 0; i < fib.size(); ++i) local[fib[i]] = static_cast<int>(i);

    for (int a = 0; a < nb_arcs; ++a)
        count[a].assign(fibers[f.base.arc(a).dst].size(), 0);
    for (int a = 0; a < f.total.arc_count(); ++a)
        ++count[f.arc_map[a]][local[f.total.arc(a).dst]];

    for (int a = 0; a < nb_arcs; ++a) {
        const auto& fib = fibers[f.base.arc(a).dst];
        for (std::size_t i = 0; i < fib.size(); ++i)
            if (count[a][i] != 1)
                return {false, FibrationWitness{a, fib[i], count[a][i]}};
    }
    return {true, std::nullopt};
}

bool is_epimorphic(const GraphMorphism& f) {
    f.validate();
    std::vector<bool> node_hit(f.base.node_count(), false);
    std::vector<bool> arc_hit(f.base.arc_count(), false);
    for (int v : f.node_map) node_hit[v] = true;
    for (int a : f.arc_map) arc_hit[a] = true;
    return std::all_of(node_hit.begin(), node_hit.end(), [](bool b) { return b; }) &&
           std::all_of(arc_hit.begin(), arc_hit.end(), [](bool b) { return b; });
}

std::vector<int> fiber(const GraphMorphism& f, int h) {
    if (h < 0 || h >= f.base.node_count()) throw std::out_of_range("unknown base node");
    std::vector<int> out;
    for (std::size_t i = 0; i < f.node_map.size(); ++i)
        if (f.node_map[i] == h) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> infer_arc_map(const Graph& total, const Graph& base,
                               const std::vector<int>& node_map) {
    if (static_cast<int>(node_map.size()) != total.node_count())
        throw morphism_error("node map size != total node count");
    std::vector<int> arc_map(total.arc_count());
    for (int a = 0; a < total.arc_count(); ++a) {
        int bs = node_map[total.arc(a).src];
        int bt = node_map[total.arc(a).dst];
        int found = -1, n_found = 0;
        for (int ba = 0; ba < base.arc_count(); ++ba)
            if (base.arc(ba).src == bs && base.arc(ba).dst == bt) {
                found = ba;
                ++n_found;
            }
        if (n_found == 0)
            throw morphism_error("no base arc for total arc " + std::to_string(a));
        if (n_found > 1)
            throw morphism_error("ambiguous arc map: parallel base arcs " + std::to_string(bs) +
                                 "->" + std::to_string(bt));
        arc_map[a] = found;
    }
    return arc_map;
}

Matrix<BigRat> quotient_matrix(const Graph& total, const std::vector<BigRat>& weights,
                               int base_nodes, const std::vector<int>& node_map) {
    if (static_cast<int>(weights.size()) != total.arc_count())
        throw std::invalid_argument("one weight per arc required");
    Matrix<BigRat> q(base_nodes, base_nodes);
    std::vector<bool> seen(static_cast<std::size_t>(base_nodes) * base_nodes, false);
    // per representative j0: column f(j0) gets sum over in-arcs grouped by
    // the source fiber; every representative must give the same sums
    for (int j0 = 0; j0 < total.node_count(); ++j0) {
        std::vector<BigRat> col(base_nodes, BigRat(0));
        for (int a : total.arcs_into(j0)) col[node_map[total.arc(a).src]] += weights[a];
        int bj = node_map[j0];
        for (int h = 0; h < base_nodes; ++h) {
            std::size_t slot = static_cast<std::size_t>(h) * base_nodes + bj;
            if (!seen[slot]) {
                seen[slot] = true;
                q(h, bj) = col[h];
            } else if (q(h, bj) != col[h]) {
                throw morphism_error("partition not equitable at base pair (" +
                                     std::to_string(h) + "," + std::to_string(bj) + ")");
            }
        }
    }
    return q;
}

namespace {

Matrix<BigRat> weighted_adjacency(const Graph& g, const std::vector<BigRat>& w) {
    Matrix<BigRat> m(g.node_count(), g.node_count());
    for (int a = 0; a < g.arc_count(); ++a) m(g.arc(a).src, g.arc(a).dst) += w[a];
    return m;
}

std::vector<BigRat> resolvent_apply(const Graph& g, const std::vector<BigRat>& w,
                                    const BigRat& beta, const std::vector<BigRat>& u) {
    const int n = g.node_count();
    Matrix<BigRat> a = Matrix<BigRat>::identity(n);
    Matrix<BigRat> m = weighted_adjacency(g, w);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) != 0) a(i, j) -= beta * m(i, j);
    return solve_left(u, a);
}

}  // namespace

QuotientIdentityResult verify_quotient_identity_exact(const GraphMorphism& f,
                                                      const BigRat& beta,
                                                      const std::vector<BigRat>& u) {
    auto check = is_fibration(f);
    if (!check.ok) throw morphism_error("not a fibration; quotient identity undefined");
    if (!is_epimorphic(f)) throw morphism_error("fibration is not epimorphic");
    std::vector<BigRat> tw = f.total_weights, bw = f.base_weights;
    if (tw.empty()) {
        tw.assign(f.total.arc_count(), BigRat(1));
        bw.assign(f.base.arc_count(), BigRat(1));
    }
    std::vector<BigRat> lhs = resolvent_apply(f.total, tw, beta, lift_vector(u, f));
    std::vector<BigRat> rhs = lift_vector(resolvent_apply(f.base, bw, beta, u), f);
    BigRat dev(0);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        BigRat d = abs(lhs[i] - rhs[i]);
        if (d > dev) dev = d;
    }
    return {dev == 0, dev, rat_to_double(dev)};
}

QuotientIdentityResult verify_quotient_identity_float(const GraphMorphism& f, double beta,
                                                      const std::vector<double>& u) {
    // reuse the exact machinery on rational images of the inputs; the
    // verdict threshold is the float-mode contract
    std::vector<BigRat> ur(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) ur[i] = rat_from_double(u[i]);
    auto res = verify_quotient_identity_exact(f, rat_from_double(beta), ur);
    double dev = rat_to_double(res.max_deviation);
    return {dev < 1e-9, res.max_deviation, dev};
}

BigRat path_weight_sum(const Graph& g, const std::vector<BigRat>& weights,
                       const std::vector<int>& sources, int target, int length) {
    // depth-first enumeration of arc sequences, walked backwards from the
    // target so shared suffixes are not regrouped (this is the oracle side
    // of the path-lifting tests: deliberately literal)
    std::vector<bool> is_source(g.node_count(), false);
    for (int s : sources) is_source[s] = true;
    BigRat total(0);
    struct Frame {
        int node;
        int depth;
        BigRat weight;
    };
    std::vector<Frame> stack;
    stack.push_back({target, 0, BigRat(1)});
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.depth == length) {
            if (is_source[fr.node]) total += fr.weight;
            continue;
        }
        for (int a : g.arcs_into(fr.node))
            stack.push_back({g.arc(a).src, fr.depth + 1, fr.weight * weights[a]});
    }
    return total;
}

}  // namespace specrank
