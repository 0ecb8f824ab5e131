#include "specrank/monotonicity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "specrank/enumeration.hpp"
#include "specrank/errors.hpp"

namespace specrank {

std::string to_string(ScoreMono m) {
    switch (m) {
        case ScoreMono::Strict: return "strict";
        case ScoreMono::Weak: return "weak";
        case ScoreMono::Violated: return "violated";
    }
    return "?";
}

std::string to_string(RankMono m) {
    switch (m) {
        case RankMono::Strict: return "strict";
        case RankMono::Plain: return "plain";
        case RankMono::Violated: return "violated";
    }
    return "?";
}

std::string to_string(Axiom a) {
    switch (a) {
        case Axiom::ScoreWeak: return "score-weak";
        case Axiom::Score: return "score";
        case Axiom::Rank: return "rank";
        case Axiom::RankStrict: return "rank-strict";
    }
    return "?";
}

CentralityOracle make_seeley_oracle() {
    CentralityOracle o;
    o.tag = "seeley";
    o.score = [](const UndirectedGraph& g, double) { return seeley(g).values; };
    o.exact = [](const UndirectedGraph& g) { return seeley_exact(g).values; };
    return o;
}

CentralityOracle make_pagerank_oracle(const BigRat& alpha) {
    CentralityOracle o;
    o.tag = "pagerank(alpha=" + rat_to_string(alpha) + ")";
    double a = rat_to_double(alpha);
    o.score = [a](const UndirectedGraph& g, double tol) {
        PowerOptions po;
        po.tol = tol;
        return pagerank(g, a, {}, po).values;
    };
    o.exact = [alpha](const UndirectedGraph& g) { return pagerank_exact(g, alpha).values; };
    o.certified = [alpha](const UndirectedGraph& g) -> std::optional<CertifiedScores> {
        for (int x = 0; x < g.vertex_count(); ++x)
            if (g.degree(x) == 0) return std::nullopt;  // renormalization untracked
        return pagerank_certified(g, alpha);
    };
    return o;
}

CentralityOracle make_eigenvector_oracle(EigenNorm norm) {
    CentralityOracle o;
    o.tag = "eigenvector(" + to_string(norm) + ")";
    o.score = [norm](const UndirectedGraph& g, double tol) {
        PowerOptions po;
        po.tol = tol;
        return eigenvector_centrality(g, norm, po).values;
    };
    return o;
}

namespace {

enum class Side { Before, After };
enum class CmpMode { Float, Refined, Certified, Exact };

class EdgeCheckContext {
public:
    EdgeCheckContext(const CentralityOracle& oracle, const UndirectedGraph& g,
                     const UndirectedGraph& gp, const CheckOptions& opts)
        : oracle_(oracle), g_(&g), gp_(&gp), opts_(opts) {
        fb_ = oracle.score(g, opts.tol);
        fa_ = oracle.score(gp, opts.tol);
    }

    bool has_exact() const { return static_cast<bool>(oracle_.exact); }
    bool has_certifier() const { return static_cast<bool>(oracle_.certified); }

    void load_refined() {
        if (rb_.empty()) {
            rb_ = oracle_.score(*g_, opts_.refine_tol);
            ra_ = oracle_.score(*gp_, opts_.refine_tol);
        }
    }

    bool load_certified() {
        if (cb_) return true;
        auto before = oracle_.certified(*g_);
        if (!before) return false;
        auto after = oracle_.certified(*gp_);
        if (!after) return false;
        cb_ = std::move(before);
        ca_ = std::move(after);
        return true;
    }

    void load_exact() {
        if (eb_.empty()) {
            eb_ = oracle_.exact(*g_);
            ea_ = oracle_.exact(*gp_);
        }
    }

    double display(Side s, int i, CmpMode mode) const {
        if (mode == CmpMode::Exact) return rat_to_double(value_exact(s, i));
        if (mode == CmpMode::Certified) return (s == Side::Before ? cb_ : ca_)->values[i];
        if (mode == CmpMode::Refined) return (s == Side::Before ? rb_ : ra_)[i];
        return (s == Side::Before ? fb_ : fa_)[i];
    }

    /// tri-sign of value(s1,i) - value(s2,j); sets *ambiguous when a
    /// comparison could not be settled at this mode's strength
    int cmp(CmpMode mode, Side s1, int i, Side s2, int j, bool* ambiguous,
            double* abs_delta) const {
        if (mode == CmpMode::Exact) {
            BigRat d = value_exact(s1, i) - value_exact(s2, j);
            if (abs_delta) *abs_delta = std::abs(rat_to_double(d));
            return d.sign();
        }
        if (mode == CmpMode::Certified) {
            const CertifiedScores& c1 = s1 == Side::Before ? *cb_ : *ca_;
            const CertifiedScores& c2 = s2 == Side::Before ? *cb_ : *ca_;
            double d = c1.values[i] - c2.values[j];
            if (abs_delta) *abs_delta = std::abs(d);
            if (std::abs(d) > c1.max_abs_error + c2.max_abs_error) return d > 0 ? 1 : -1;
            if (ambiguous) *ambiguous = true;
            return 0;
        }
        double band = mode == CmpMode::Refined ? opts_.refine_band : opts_.band;
        const std::vector<double>& v1 =
            mode == CmpMode::Refined ? (s1 == Side::Before ? rb_ : ra_)
                                     : (s1 == Side::Before ? fb_ : fa_);
        const std::vector<double>& v2 =
            mode == CmpMode::Refined ? (s2 == Side::Before ? rb_ : ra_)
                                     : (s2 == Side::Before ? fb_ : fa_);
        double d = v1[i] - v2[j];
        if (abs_delta) *abs_delta = std::abs(d);
        if (std::abs(d) <= band) {
            if (ambiguous) *ambiguous = true;
            return 0;
        }
        return d > 0 ? 1 : -1;
    }

private:
    const BigRat& value_exact(Side s, int i) const {
        return (s == Side::Before ? eb_ : ea_)[i];
    }

    const CentralityOracle& oracle_;
    const UndirectedGraph *g_, *gp_;
    CheckOptions opts_;
    std::vector<double> fb_, fa_, rb_, ra_;
    std::optional<CertifiedScores> cb_, ca_;
    std::vector<BigRat> eb_, ea_;
};

struct BuildOutcome {
    Verdict verdict;
    // an unsettled comparison fed one of the verdict's claims; ties that
    // cannot change the verdict (e.g. a tied dominance hypothesis whose
    // conclusion is clearly fine) do not count
    bool ambiguous = false;
};

BuildOutcome build_verdict(const EdgeCheckContext& ctx, const std::string& tag, int n, int x,
                           int y, CmpMode mode) {
    BuildOutcome out;
    Verdict& v = out.verdict;
    v.x = x;
    v.y = y;
    v.centrality = tag;
    v.x_before = ctx.display(Side::Before, x, mode);
    v.x_after = ctx.display(Side::After, x, mode);
    v.y_before = ctx.display(Side::Before, y, mode);
    v.y_after = ctx.display(Side::After, y, mode);
    v.exact_verified = mode == CmpMode::Exact;

    auto track_margin = [&](double d) {
        if (mode != CmpMode::Exact) v.min_margin = std::min(v.min_margin, d);
    };

    bool sx_amb = false, sy_amb = false;
    double dx_abs = 0, dy_abs = 0;
    int sx = ctx.cmp(mode, Side::After, x, Side::Before, x, &sx_amb, &dx_abs);
    int sy = ctx.cmp(mode, Side::After, y, Side::Before, y, &sy_amb, &dy_abs);
    if (sx > 0 && sy > 0) {
        v.score_monotone = ScoreMono::Strict;
    } else if (sx < 0 || sy < 0) {
        v.score_monotone = ScoreMono::Violated;
        if (sx < 0) track_margin(dx_abs);
        if (sy < 0) track_margin(dy_abs);
        out.ambiguous |= sx_amb || sy_amb;
    } else {
        // an equality claim: must be settled exactly, never by a band tie
        v.score_monotone = ScoreMono::Weak;
        out.ambiguous |= sx_amb || sy_amb;
    }

    for (int e : {x, y}) {
        for (int z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            bool hb_amb = false, ha_amb = false;
            double hb_abs = 0, ha_abs = 0;
            int hb = ctx.cmp(mode, Side::Before, e, Side::Before, z, &hb_amb, &hb_abs);
            if (hb < 0) continue;
            int ha = ctx.cmp(mode, Side::After, e, Side::After, z, &ha_amb, &ha_abs);
            if (ha > 0) continue;
            // from here the comparison pair feeds a claim: both of its sides
            // must be trustworthy
            out.ambiguous |= hb_amb || ha_amb;
            RankViolationEntry entry;
            entry.endpoint = e;
            entry.z = z;
            entry.before_endpoint = ctx.display(Side::Before, e, mode);
            entry.before_z = ctx.display(Side::Before, z, mode);
            entry.after_endpoint = ctx.display(Side::After, e, mode);
            entry.after_z = ctx.display(Side::After, z, mode);
            entry.strict_only = ha == 0;
            if (!entry.strict_only) {
                if (hb > 0) track_margin(hb_abs);
                track_margin(ha_abs);
            }
            v.rank_violations.push_back(entry);
        }
    }
    bool any_plain = false, any_strict_only = false;
    for (const auto& e : v.rank_violations) (e.strict_only ? any_strict_only : any_plain) = true;
    v.rank_monotone = any_plain    ? RankMono::Violated
                      : any_strict_only ? RankMono::Plain
                                        : RankMono::Strict;
    return out;
}

bool has_assertions(const Verdict& v) {
    return v.score_monotone != ScoreMono::Strict || !v.rank_violations.empty();
}

}  // namespace

Verdict check_edge(const CentralityOracle& oracle, const UndirectedGraph& g, int x, int y,
                   const CheckOptions& opts) {
    UndirectedGraph gp = g.with_edge(x, y);  // validates the pair
    EdgeCheckContext ctx(oracle, g, gp, opts);
    const int n = g.vertex_count();

    if (opts.force_exact && ctx.has_exact()) {
        ctx.load_exact();
        return build_verdict(ctx, oracle.tag, n, x, y, CmpMode::Exact).verdict;
    }

    BuildOutcome first = build_verdict(ctx, oracle.tag, n, x, y, CmpMode::Float);
    if (!first.ambiguous && !has_assertions(first.verdict)) return first.verdict;

    // a claim needs defending: settle it at the strongest arithmetic
    // available, cheapest authority first
    if (ctx.has_certifier() && ctx.load_certified()) {
        BuildOutcome cert = build_verdict(ctx, oracle.tag, n, x, y, CmpMode::Certified);
        if (!cert.ambiguous) {
            cert.verdict.exact_verified = true;  // every claimed sign carries a proof
            return cert.verdict;
        }
    }
    if (ctx.has_exact()) {
        ctx.load_exact();
        return build_verdict(ctx, oracle.tag, n, x, y, CmpMode::Exact).verdict;
    }
    ctx.load_refined();
    return build_verdict(ctx, oracle.tag, n, x, y, CmpMode::Refined).verdict;
}

ScanResult scan_graph(const CentralityOracle& oracle, const UndirectedGraph& g,
                      const SamplerConfig& sampler, long long budget,
                      const CheckOptions& opts, bool parallel) {
    if (budget < 1) throw config_error("budget must be at least 1");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    std::mt19937_64 rng(sampler.seed);

    if (sampler.kind == SamplerConfig::Kind::Random) {
        std::set<std::pair<int, int>> seen;
        std::uniform_int_distribution<int> dist(0, n - 1);
        long long tries = 0;
        const long long max_tries = budget * 200 + 1000;
        while (static_cast<long long>(pairs.size()) < budget && tries++ < max_tries) {
            int a = dist(rng), b = dist(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (g.has_edge(a, b)) continue;
            if (seen.insert({a, b}).second) pairs.emplace_back(a, b);
        }
    } else {
        if (!(sampler.top_fraction > 0.0 && sampler.top_fraction <= 1.0) ||
            !(sampler.bottom_fraction > 0.0 && sampler.bottom_fraction <= 1.0))
            throw config_error("stratum fractions must lie in (0,1]");
        std::vector<double> s = oracle.score(g, opts.tol);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return s[a] > s[b]; });
        int top = std::clamp(static_cast<int>(std::ceil(sampler.top_fraction * n)), 1, n);
        int bottom = std::clamp(static_cast<int>(std::ceil(sampler.bottom_fraction * n)), 1, n);
        std::set<std::pair<int, int>> cand;
        for (int i = 0; i < top; ++i)
            for (int j = n - bottom; j < n; ++j) {
                int a = order[i], b = order[j];
                if (a == b) continue;
                if (a > b) std::swap(a, b);
                if (!g.has_edge(a, b)) cand.insert({a, b});
            }
        pairs.assign(cand.begin(), cand.end());
        if (static_cast<long long>(pairs.size()) > budget) {
            std::shuffle(pairs.begin(), pairs.end(), rng);
            pairs.resize(budget);
        }
    }
    std::sort(pairs.begin(), pairs.end());

    ScanResult res;
    res.checked = static_cast<long long>(pairs.size());
    std::vector<char> violating(pairs.size(), 0);
    std::vector<char> hurt(pairs.size(), 0);
    std::vector<Verdict> verdicts(pairs.size());
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (failure) continue;
        try {
            Verdict v = check_edge(oracle, g, pairs[i].first, pairs[i].second, opts);
            hurt[i] = v.both_endpoints_dropped();
            if (v.score_monotone == ScoreMono::Violated || v.rank_monotone == RankMono::Violated) {
                violating[i] = 1;
                verdicts[i] = std::move(v);
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        res.both_hurt += hurt[i];
        if (violating[i]) res.violations.push_back(std::move(verdicts[i]));
    }
    return res;
}

namespace {

bool admits(Axiom axiom, const Verdict& v, double margin) {
    bool strong = v.exact_verified || v.min_margin > margin;
    switch (axiom) {
        case Axiom::ScoreWeak:
            return v.score_monotone == ScoreMono::Violated && strong;
        case Axiom::Score:
            if (v.score_monotone == ScoreMono::Violated) return strong;
            // equality claims must be exact facts, never float ties
            return v.score_monotone == ScoreMono::Weak && v.exact_verified;
        case Axiom::Rank:
            return v.rank_monotone == RankMono::Violated && strong;
        case Axiom::RankStrict:
            if (v.rank_monotone == RankMono::Violated) return strong;
            return v.rank_monotone == RankMono::Plain && v.exact_verified;
    }
    return false;
}

}  // namespace

std::optional<Counterexample> search_counterexample(const CentralityOracle& oracle,
                                                    int max_vertices, Axiom axiom,
                                                    bool connected_only,
                                                    const SearchOptions& opts) {
    using namespace smallgraphs;
    if (max_vertices < 2 || max_vertices > 8)
        throw config_error("exhaustive search requires 2 <= max_vertices <= 8");

    for (int n = 2; n <= max_vertices; ++n) {
        const std::uint64_t total = std::uint64_t(1) << pair_count(n);
        std::atomic<std::uint64_t> best_key{~std::uint64_t(0)};
        std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic, 64) if (opts.parallel)
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (failure) continue;
            if (mask << 6 > best_key.load(std::memory_order_relaxed)) continue;
            if (opts.dedup && canonical_mask(n, mask) != mask) continue;
            if (connected_only && !mask_connected(n, mask)) continue;
            try {
                UndirectedGraph g = from_mask(n, mask);
                int pair_idx = -1;
                for (int yv = 1; yv < n; ++yv) {
                    for (int xv = 0; xv < yv; ++xv) {
                        ++pair_idx;
                        if (g.has_edge(xv, yv)) continue;
                        std::uint64_t key = (mask << 6) | std::uint64_t(pair_idx);
                        if (key >= best_key.load(std::memory_order_relaxed)) continue;
                        Verdict v;
                        try {
                            v = check_edge(oracle, g, xv, yv, opts.check);
                        } catch (const convergence_error&) {
                            continue;
                        }
                        if (!admits(axiom, v, opts.margin)) continue;
                        std::uint64_t prev = best_key.load();
                        while (key < prev && !best_key.compare_exchange_weak(prev, key)) {
                        }
                    }
                }
            } catch (const undefined_index_error&) {
                // centrality undefined on this graph (e.g. no edges): skip
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);

        std::uint64_t key = best_key.load();
        if (key != ~std::uint64_t(0)) {
            std::uint64_t mask = key >> 6;
            int pair_idx = static_cast<int>(key & 63);
            UndirectedGraph g = from_mask(n, mask);
            int idx = -1;
            for (int yv = 1; yv < n; ++yv)
                for (int xv = 0; xv < yv; ++xv) {
                    ++idx;
                    if (idx == pair_idx) {
                        Verdict v = check_edge(oracle, g, xv, yv, opts.check);
                        return Counterexample{std::move(g), xv, yv, std::move(v)};
                    }
                }
        }
    }
    return std::nullopt;
}

namespace {

bool is_star_plus_isolated(const UndirectedGraph& g) {
    const int m = g.edge_count();
    if (m < 1) return false;
    bool has_center = false, has_isolated = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == m) has_center = true;
        if (g.degree(v) == 0) has_isolated = true;
    }
    return has_center && has_isolated;
}

}  // namespace

BigRat find_monotone_alpha(const UndirectedGraph& g, int x, int y, AlphaFlavor flavor) {
    if (x == y || g.has_edge(x, y))
        throw invalid_edge_error("pair must be non-adjacent and distinct");
    if (flavor == AlphaFlavor::Score && is_star_plus_isolated(g))
        throw not_found_error(
            "excluded case: star plus isolated vertices is only weakly score monotone");
    UndirectedGraph gp = g.with_edge(x, y);
    const int n = g.vertex_count();
    for (int j = 1; j <= 60; ++j) {
        BigRat alpha((BigInt(1) << j) - 1, BigInt(1) << j);
        std::vector<BigRat> before = pagerank_exact(g, alpha).values;
        std::vector<BigRat> after = pagerank_exact(gp, alpha).values;
        bool ok = true;
        if (flavor == AlphaFlavor::Score) {
            ok = after[x] > before[x] && after[y] > before[y];
        } else {
            for (int e : {x, y}) {
                for (int z = 0; z < n && ok; ++z) {
                    if (z == x || z == y) continue;
                    if (before[e] >= before[z] && !(after[e] > after[z])) ok = false;
                }
                if (!ok) break;
            }
        }
        if (ok) return alpha;
    }
    throw not_found_error("no probe up to 1 - 2^-60 worked (pathological or excluded case)");
}

SeeleyAuditResult audit_seeley_monotonicity(int n, bool parallel) {
    using namespace smallgraphs;
    if (n < 2 || n > 8) throw config_error("audit requires 2 <= n <= 8");
    CentralityOracle oracle = make_seeley_oracle();
    const std::uint64_t total = std::uint64_t(1) << pair_count(n);

    long long graphs = 0, checks = 0, rank_bad = 0, score_bad = 0, weak = 0, mismatch = 0;
#pragma omp parallel for schedule(dynamic, 128) if (parallel) \
    reduction(+ : graphs, checks, rank_bad, score_bad, weak, mismatch)
    for (std::uint64_t mask = 1; mask < total; ++mask) {  // mask 0 has no index
        UndirectedGraph g = from_mask(n, mask);
        const int m = g.edge_count();
        ++graphs;
        for (int yv = 1; yv < n; ++yv)
            for (int xv = 0; xv < yv; ++xv) {
                if (g.has_edge(xv, yv)) continue;
                Verdict v = check_edge(oracle, g, xv, yv);
                ++checks;
                if (v.rank_monotone != RankMono::Strict) ++rank_bad;
                if (v.score_monotone == ScoreMono::Violated) ++score_bad;
                bool star_center = g.degree(xv) == m || g.degree(yv) == m;
                if (v.score_monotone == ScoreMono::Weak) {
                    ++weak;
                    if (!star_center) ++mismatch;
                } else if (star_center) {
                    ++mismatch;
                }
            }
    }
    SeeleyAuditResult res;
    res.graphs = graphs;
    res.checks = checks;
    res.rank_not_strict = rank_bad;
    res.score_violations = score_bad;
    res.weak_cases = weak;
    res.weak_mismatches = mismatch;
    return res;
}

}  // namespace specrank
