#include "specrank/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "specrank/errors.hpp"
#include "specrank/linear_solve.hpp"

namespace specrank {

std::string to_string(EigenNorm n) {
    switch (n) {
        case EigenNorm::L1: return "l1";
        case EigenNorm::L2: return "l2";
        case EigenNorm::ProjectOnes: return "project-ones";
    }
    return "?";
}

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// out[j] = sum over neighbors i of j of in[i] / d(i); shifted variants add in[j].
// Row-parallel: each output entry is an independent serial sum.
void walk_pull(const UndirectedGraph& g, const std::vector<double>& in,
               std::vector<double>& out, bool parallel) {
    const int n = g.vertex_count();
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i : g.neighbors(j)) acc += in[i] / g.degree(i);
        out[j] = acc;
    }
}

void adjacency_pull_shifted(const UndirectedGraph& g, const std::vector<double>& in,
                            std::vector<double>& out, bool parallel) {
    const int n = g.vertex_count();
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < n; ++j) {
        double acc = in[j];  // +I shift
        for (int i : g.neighbors(j)) acc += in[i];
        out[j] = acc;
    }
}

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double l1_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

// dominant eigenvalue of A restricted to the vertices in `verts` (Rayleigh
// quotient after shifted power iteration to the requested tolerance)
double component_eigenvalue(const UndirectedGraph& g, const std::vector<int>& verts,
                            double tol) {
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<double> w(verts.size(), 1.0 / std::sqrt(double(verts.size())));
    std::vector<double> next(verts.size());
    for (long it = 0; it < 50'000; ++it) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
            double acc = w[j];
            for (int i : g.neighbors(verts[j])) acc += w[local[i]];
            next[j] = acc;
        }
        double nn = l2_norm(next);
        if (nn == 0.0) return 0.0;
        for (auto& x : next) x /= nn;
        double diff = 0.0;
        for (std::size_t j = 0; j < verts.size(); ++j)
            diff += (next[j] - w[j]) * (next[j] - w[j]);
        w.swap(next);
        if (std::sqrt(diff) < tol * 0.1) break;
    }
    // Rayleigh quotient of the shifted matrix, minus the shift
    double num = 0.0;
    for (std::size_t j = 0; j < verts.size(); ++j) {
        double acc = w[j];
        for (int i : g.neighbors(verts[j])) acc += w[local[i]];
        num += w[j] * acc;
    }
    return num - 1.0;
}

}  // namespace

std::vector<int> connected_components(const UndirectedGraph& g, int* count) {
    std::vector<int> comp(g.vertex_count(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

ScoreVector seeley(const UndirectedGraph& g) {
    if (g.edge_count() == 0) throw undefined_index_error("degree index undefined: no edges");
    ScoreVector s;
    s.tag = "seeley";
    s.values.resize(g.vertex_count());
    const double m2 = 2.0 * g.edge_count();
    for (int x = 0; x < g.vertex_count(); ++x) s.values[x] = g.degree(x) / m2;
    return s;
}

ExactScoreVector seeley_exact(const UndirectedGraph& g) {
    if (g.edge_count() == 0) throw undefined_index_error("degree index undefined: no edges");
    ExactScoreVector s;
    s.tag = "seeley";
    s.values.resize(g.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x)
        s.values[x] = BigRat(g.degree(x), 2 * g.edge_count());
    return s;
}

ScoreVector eigenvector_centrality(const UndirectedGraph& g, EigenNorm norm,
                                   PowerOptions opts) {
    const int n = g.vertex_count();
    if (g.edge_count() == 0) throw undefined_index_error("eigenvector undefined: no edges");
    std::vector<double> w(n, 1.0 / std::sqrt(double(n)));
    std::vector<double> next(n);
    bool converged = false;
    double residual = 0.0;
    for (long it = 0; it < opts.max_iter; ++it) {
        adjacency_pull_shifted(g, w, next, opts.parallel);
        double nn = l2_norm(next);
        for (auto& x : next) x /= nn;
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual += (next[i] - w[i]) * (next[i] - w[i]);
        residual = std::sqrt(residual);
        w.swap(next);
        if (residual < opts.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) throw convergence_error("power iteration did not converge", residual);

    // Rayleigh quotient on the shifted matrix, reported minus the shift
    adjacency_pull_shifted(g, w, next, opts.parallel);
    double lambda = std::inner_product(w.begin(), w.end(), next.begin(), 0.0) - 1.0;

    // orientation: dominant eigenvector of A+I is non-negative; flip if the
    // iteration settled on the negative representative
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (total < 0)
        for (auto& x : w) x = -x;

    ScoreVector s;
    s.values = std::move(w);
    switch (norm) {
        case EigenNorm::L1: {
            double l1 = 0.0;
            for (double x : s.values) l1 += std::abs(x);
            for (auto& x : s.values) x /= l1;
            break;
        }
        case EigenNorm::L2:
            break;  // already unit l2, non-negative orientation
        case EigenNorm::ProjectOnes: {
            double dot = std::accumulate(s.values.begin(), s.values.end(), 0.0);
            for (auto& x : s.values) x *= dot;
            break;
        }
    }
    s.tag = "eigenvector(norm=" + to_string(norm) + ",tol=" + fmt(opts.tol) + ")";

    // flag start-vector-dependent results: two components tying for the
    // dominant eigenvalue
    int comp_count = 0;
    std::vector<int> comp = connected_components(g, &comp_count);
    if (comp_count > 1) {
        std::vector<std::vector<int>> members(comp_count);
        for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);
        double best = -1e300, second = -1e300;
        for (const auto& verts : members) {
            if (verts.size() == 1 && g.degree(verts[0]) == 0) continue;
            double lam = component_eigenvalue(g, verts, opts.tol);
            if (lam > best) {
                second = best;
                best = lam;
            } else if (lam > second) {
                second = lam;
            }
        }
        if (second > -1e300 && std::abs(best - second) < opts.tol)
            s.tag += ";degenerate-dominant";
    }
    (void)lambda;
    return s;
}

ScoreVector pagerank(const UndirectedGraph& g, double alpha, const std::vector<double>& v,
                     PowerOptions opts) {
    const int n = g.vertex_count();
    if (alpha < 0.0 || alpha >= 1.0) throw config_error("alpha must lie in [0,1)");
    if (n == 0) return {{}, "pagerank"};
    std::vector<double> pref = v;
    if (pref.empty()) pref.assign(n, 1.0 / n);
    if (static_cast<int>(pref.size()) != n) throw config_error("preference vector length mismatch");

    std::vector<double> r = pref, next(n);
    bool converged = false;
    double residual = 0.0;
    for (long it = 0; it < opts.max_iter; ++it) {
        walk_pull(g, r, next, opts.parallel);
        for (int j = 0; j < n; ++j) next[j] = (1.0 - alpha) * pref[j] + alpha * next[j];
        residual = l1_diff(next, r);
        r.swap(next);
        if (residual < opts.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) throw convergence_error("pagerank iteration did not converge", residual);

    bool has_isolated = false;
    for (int x = 0; x < n && !has_isolated; ++x) has_isolated = g.degree(x) == 0;
    if (has_isolated) {
        double l1 = std::accumulate(r.begin(), r.end(), 0.0);
        for (auto& x : r) x /= l1;
    }
    ScoreVector s;
    s.values = std::move(r);
    s.tag = "pagerank(alpha=" + fmt(alpha) + ",v=" + (v.empty() ? "uniform" : "custom") + ")";
    return s;
}

ExactScoreVector pagerank_exact(const UndirectedGraph& g, const BigRat& alpha,
                                const std::vector<BigRat>& v) {
    const int n = g.vertex_count();
    if (alpha < 0 || alpha >= 1) throw config_error("alpha must lie in [0,1)");
    std::vector<BigRat> pref = v;
    if (pref.empty()) pref.assign(n, BigRat(1, n));
    if (static_cast<int>(pref.size()) != n) throw config_error("preference vector length mismatch");

    // system r (I - alpha W) = (1-alpha) v over the rationals
    Matrix<BigRat> a = Matrix<BigRat>::identity(n);
    for (int j = 0; j < n; ++j)
        for (int i : g.neighbors(j)) a(i, j) -= alpha / g.degree(i);
    std::vector<BigRat> rhs(n);
    for (int j = 0; j < n; ++j) rhs[j] = (1 - alpha) * pref[j];
    std::vector<BigRat> r = solve_left(rhs, a);

    bool has_isolated = false;
    for (int x = 0; x < n && !has_isolated; ++x) has_isolated = g.degree(x) == 0;
    if (has_isolated) {
        BigRat l1(0);
        for (const auto& x : r) l1 += x;
        for (auto& x : r) x /= l1;
    }
    ExactScoreVector s;
    s.values = std::move(r);
    s.tag = "pagerank-exact(alpha=" + rat_to_string(alpha) + ")";
    return s;
}

CertifiedScores pagerank_certified(const UndirectedGraph& g, const BigRat& alpha,
                                   PowerOptions opts) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x)
        if (g.degree(x) == 0)
            throw config_error("certificate path requires a graph without isolated vertices");
    opts.tol = std::min(opts.tol, 1e-13);
    ScoreVector s = pagerank(g, rat_to_double(alpha), {}, opts);

    // Exact l1 residual of the floating vector in the rational system,
    // computed over integers: scale by q * n * L * 2^128 with a = p/q and
    // L = lcm of the degrees, which clears every denominator in sight.
    constexpr int kShift = 128;
    const BigInt p = numerator(alpha), q = denominator(alpha);
    BigInt deg_lcm = 1;
    for (int x = 0; x < n; ++x) deg_lcm = lcm(deg_lcm, BigInt(g.degree(x)));
    std::vector<BigInt> m(n);
    for (int i = 0; i < n; ++i) {
        BigRat ri = rat_from_double(s.values[i]);
        BigInt den = denominator(ri);  // a power of two for finite doubles
        if ((BigInt(1) << kShift) % den != 0)
            throw std::logic_error("score scale exceeds the certificate shift");
        m[i] = numerator(ri) * ((BigInt(1) << kShift) / den);
    }
    BigInt resid_scaled(0);
    const BigInt pref_term = (q - p) * deg_lcm * (BigInt(1) << kShift);
    for (int j = 0; j < n; ++j) {
        BigInt acc = m[j] * q * n * deg_lcm;
        for (int i : g.neighbors(j)) acc -= p * n * m[i] * (deg_lcm / g.degree(i));
        acc -= pref_term;
        resid_scaled += abs(acc);
    }
    // |r_i - exact_i| <= ||resid||_1 / (1-a); unscale and round up
    BigRat bound = BigRat(resid_scaled * q, q * n * deg_lcm) /
                   ((q - p) * (BigInt(1) << kShift));
    double b = rat_to_double(bound);
    // slack past the double conversion and the float subtraction done by
    // comparisons downstream
    return {std::move(s.values), b * (1.0 + 1e-9) + 1e-15};
}

double spectral_radius_estimate(const WeightedGraph& g, long iters) {
    const int n = g.graph.node_count();
    if (n == 0) return 0.0;
    Matrix<double> m = adjacency_matrix_d(g);
    std::vector<double> w(n, 1.0 / std::sqrt(double(n))), next(n);
    double lambda = 0.0;
    for (long it = 0; it < iters; ++it) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += w[i] * std::abs(m(i, j));
            next[j] = acc;
        }
        lambda = l2_norm(next);
        if (lambda == 0.0) return 0.0;
        for (auto& x : next) x /= lambda;
        w.swap(next);
    }
    return lambda;
}

ScoreVector damped_spectral(const WeightedGraph& g, double beta, const std::vector<double>& v,
                            PowerOptions opts) {
    const int n = g.graph.node_count();
    if (beta < 0) throw config_error("beta must be non-negative");
    if (static_cast<int>(v.size()) != n) throw config_error("preference vector length mismatch");
    if (beta > 0) {
        double rho = spectral_radius_estimate(g);
        if (rho > 0 && beta >= 0.99 / rho)
            throw divergence_error("beta " + fmt(beta) + " at or beyond 1/rho estimate " +
                                   fmt(1.0 / rho));
    }
    // r = v + beta r M, a contraction under the spectral bound
    Matrix<double> m = adjacency_matrix_d(g);
    std::vector<double> r = v, next(n);
    double residual = 0.0;
    for (long it = 0; it < opts.max_iter; ++it) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int i = 0; i < n; ++i) acc += r[i] * m(i, j);
            next[j] = v[j] + beta * acc;
        }
        residual = l1_diff(next, r);
        r.swap(next);
        if (residual < opts.tol) {
            ScoreVector s;
            s.values = std::move(r);
            s.tag = "damped-spectral(beta=" + fmt(beta) + ")";
            return s;
        }
    }
    throw convergence_error("damped spectral iteration did not converge", residual);
}

ExactScoreVector damped_spectral_exact(const WeightedGraph& g, const BigRat& beta,
                                       const std::vector<BigRat>& v) {
    const int n = g.graph.node_count();
    if (static_cast<int>(v.size()) != n) throw config_error("preference vector length mismatch");
    Matrix<BigRat> a = Matrix<BigRat>::identity(n);
    Matrix<BigRat> m = adjacency_matrix(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) -= beta * m(i, j);
    ExactScoreVector s;
    s.values = solve_left(v, a);
    s.tag = "damped-spectral-exact(beta=" + rat_to_string(beta) + ")";
    return s;
}

}  // namespace specrank
