#include <doctest.h>

#include <cmath>
#include <random>

#include "specrank/centrality.hpp"
#include "specrank/errors.hpp"
#include "support/generators.hpp"

using namespace specrank;

namespace {

UndirectedGraph triangle() { return UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
UndirectedGraph path3() { return UndirectedGraph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("seeley index") {
    ExactScoreVector tri = seeley_exact(triangle());
    for (int v = 0; v < 3; ++v) CHECK(tri.values[v] == BigRat(1, 3));

    ExactScoreVector p3 = seeley_exact(path3());
    CHECK(p3.values[0] == BigRat(1, 4));
    CHECK(p3.values[1] == BigRat(1, 2));

    // star plus isolated vertex
    ExactScoreVector s = seeley_exact(UndirectedGraph(5, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(s.values[0] == BigRat(1, 2));
    CHECK(s.values[1] == BigRat(1, 6));
    CHECK(s.values[4] == 0);

    CHECK_THROWS_AS(seeley(UndirectedGraph(3, {})), undefined_index_error);
    CHECK(seeley(path3()).values[1] == doctest::Approx(0.5));
}

TEST_CASE("eigenvector centrality") {
    UndirectedGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    ScoreVector l1 = eigenvector_centrality(c4, EigenNorm::L1);
    for (int v = 0; v < 4; ++v) CHECK(l1.values[v] == doctest::Approx(0.25).epsilon(1e-9));

    ScoreVector proj = eigenvector_centrality(UndirectedGraph(2, {{0, 1}}), EigenNorm::ProjectOnes);
    CHECK(proj.values[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(proj.values[1] == doctest::Approx(1.0).epsilon(1e-9));

    // star on 4 vertices: center sqrt(1/2), leaves sqrt(1/6) in l2
    // (eigenvalue sqrt(3), center/leaf ratio sqrt(3), unit l2 norm)
    ScoreVector l2 = eigenvector_centrality(UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}}),
                                            EigenNorm::L2);
    CHECK(l2.values[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    for (int leaf = 1; leaf < 4; ++leaf)
        CHECK(l2.values[leaf] == doctest::Approx(std::sqrt(1.0 / 6)).epsilon(1e-9));

    CHECK_THROWS_AS(eigenvector_centrality(UndirectedGraph(2, {}), EigenNorm::L1),
                    undefined_index_error);
}

TEST_CASE("eigenvector satisfies the eigen equation") {
    std::mt19937_64 rng(17);
    PowerOptions opts;
    for (int trial = 0; trial < 25; ++trial) {
        UndirectedGraph g = testsupport::random_connected_graph(rng, 2 + trial % 7);
        ScoreVector w = eigenvector_centrality(g, EigenNorm::L2, opts);
        // Rayleigh quotient
        double lambda = 0;
        std::vector<double> aw(g.vertex_count(), 0.0);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int u : g.neighbors(v)) aw[v] += w.values[u];
        for (int v = 0; v < g.vertex_count(); ++v) lambda += w.values[v] * aw[v];
        double worst = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            worst = std::max(worst, std::abs(aw[v] - lambda * w.values[v]));
        CHECK(worst / lambda < 10 * opts.tol);
    }
}

TEST_CASE("degenerate dominant pair is flagged") {
    // two disjoint triangles: equal component eigenvalues
    UndirectedGraph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    ScoreVector s = eigenvector_centrality(two, EigenNorm::L1);
    CHECK(s.tag.find("degenerate-dominant") != std::string::npos);
    // triangle plus a lone edge: clear winner, no flag
    UndirectedGraph mixed(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    CHECK(eigenvector_centrality(mixed, EigenNorm::L1).tag.find("degenerate") ==
          std::string::npos);
}

TEST_CASE("pagerank basics") {
    for (double a : {0.1, 0.5, 0.85}) {
        ScoreVector k2 = pagerank(UndirectedGraph(2, {{0, 1}}), a);
        CHECK(k2.values[0] == doctest::Approx(0.5).epsilon(1e-10));
        ScoreVector tri = pagerank(triangle(), a);
        CHECK(tri.values[2] == doctest::Approx(1.0 / 3).epsilon(1e-10));
    }
    // alpha 0 returns the preference vector
    std::vector<double> v{0.7, 0.2, 0.1};
    ScoreVector at0 = pagerank(path3(), 0.0, v);
    for (int i = 0; i < 3; ++i) CHECK(at0.values[i] == doctest::Approx(v[i]));

    CHECK_THROWS_AS(pagerank(path3(), 1.0), config_error);
    CHECK_THROWS_AS(pagerank(path3(), -0.1), config_error);

    // K2 plus isolated vertex at alpha = 1/2: raw (1/3,1/3,1/6), normalized
    ScoreVector dang = pagerank(UndirectedGraph(3, {{0, 1}}), 0.5);
    CHECK(dang.values[0] == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(dang.values[2] == doctest::Approx(0.2).epsilon(1e-10));
}

TEST_CASE("exact pagerank") {
    ExactScoreVector k2 = pagerank_exact(UndirectedGraph(2, {{0, 1}}), BigRat(2, 3));
    CHECK(k2.values[0] == BigRat(1, 2));
    CHECK(k2.values[1] == BigRat(1, 2));

    ExactScoreVector dang = pagerank_exact(UndirectedGraph(3, {{0, 1}}), BigRat(1, 2));
    CHECK(dang.values[0] == BigRat(2, 5));
    CHECK(dang.values[2] == BigRat(1, 5));

    // multiply-back: r (I - a W) = (1-a) v on P3
    BigRat alpha(1, 2);
    ExactScoreVector p3 = pagerank_exact(path3(), alpha);
    const auto& r = p3.values;
    CHECK(r[0] - alpha * r[1] / 2 == BigRat(1, 6));
    CHECK(r[1] - alpha * r[0] - alpha * r[2] == BigRat(1, 6));
    CHECK(r[2] - alpha * r[1] / 2 == BigRat(1, 6));

    BigRat mass(0);
    for (const auto& q : r) mass += q;
    CHECK(mass == 1);
}

TEST_CASE("pagerank float and exact agree") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        UndirectedGraph g = testsupport::random_graph(rng, 2 + trial % 7, 0.4);
        for (BigRat alpha : {BigRat(1, 4), BigRat(1, 2), BigRat(17, 20)}) {
            ScoreVector f = pagerank(g, rat_to_double(alpha));
            ExactScoreVector e = pagerank_exact(g, alpha);
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(std::abs(f.values[v] - rat_to_double(e.values[v])) < 1e-8);
        }
    }
}

TEST_CASE("certified pagerank bounds the true values") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        UndirectedGraph g = testsupport::random_connected_graph(rng, 3 + trial % 6);
        BigRat alpha(17, 20);
        CertifiedScores c = pagerank_certified(g, alpha);
        ExactScoreVector e = pagerank_exact(g, alpha);
        CHECK(c.max_abs_error < 1e-9);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(std::abs(c.values[v] - rat_to_double(e.values[v])) <= c.max_abs_error);
    }
    CHECK_THROWS_AS(pagerank_certified(UndirectedGraph(3, {{0, 1}}), BigRat(1, 2)),
                    config_error);
}

TEST_CASE("pagerank approaches the degree index as damping approaches one") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        UndirectedGraph g = testsupport::random_connected_graph(rng, 2 + trial % 7);
        ScoreVector pr = pagerank(g, 0.999);
        ScoreVector se = seeley(g);
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(std::abs(pr.values[v] - se.values[v]) < 0.01);
    }
}

TEST_CASE("damped spectral ranking") {
    // single node, no arcs
    WeightedGraph lone(Graph(1, {}));
    ScoreVector s1 = damped_spectral(lone, 0.5, {1.0});
    CHECK(s1.values[0] == doctest::Approx(1.0));

    // K2 at beta 1/4, ones preference: both entries 4/3
    WeightedGraph k2(UndirectedGraph(2, {{0, 1}}).directed_view());
    ScoreVector katz = damped_spectral(k2, 0.25, {1.0, 1.0});
    CHECK(katz.values[0] == doctest::Approx(4.0 / 3).epsilon(1e-9));
    ExactScoreVector katz_x = damped_spectral_exact(k2, BigRat(1, 4), {BigRat(1), BigRat(1)});
    CHECK(katz_x.values[0] == BigRat(4, 3));
    CHECK(katz_x.values[1] == BigRat(4, 3));

    // beta 0: identity
    ScoreVector at0 = damped_spectral(k2, 0.0, {0.3, 0.7});
    CHECK(at0.values[0] == doctest::Approx(0.3));

    // spectral bound: rho(K2) = 1, beta must stay below 1
    CHECK_THROWS_AS(damped_spectral(k2, 1.01, {1.0, 1.0}), divergence_error);
    CHECK(spectral_radius_estimate(k2) == doctest::Approx(1.0).epsilon(1e-6));
}
