#include "specrank/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace specrank::smallgraphs {

UndirectedGraph from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1) edges.emplace_back(i, j);
    return UndirectedGraph(n, std::move(edges));
}

std::uint64_t to_mask(const UndirectedGraph& g) {
    std::uint64_t mask = 0;
    for (auto [i, j] : g.edges()) mask |= std::uint64_t(1) << pair_bit(i, j);
    return mask;
}

bool mask_connected(int n, std::uint64_t mask) {
    if (n <= 1) return true;
    std::array<std::uint32_t, 16> adj{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::array<int, 16> deg{};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1) {
                ++deg[i];
                ++deg[j];
            }
    // key per vertex: own degree, then sorted neighbor degrees
    std::vector<std::vector<int>> key(n);
    for (int v = 0; v < n; ++v) key[v].push_back(deg[v]);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1) {
                key[i].push_back(deg[j]);
                key[j].push_back(deg[i]);
            }
    for (int v = 0; v < n; ++v) std::sort(key[v].begin() + 1, key[v].end());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[a] > key[b]; });
    std::array<int, 16> pos{};
    for (int r = 0; r < n; ++r) pos[order[r]] = r;
    std::uint64_t out = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask >> pair_bit(i, j) & 1) {
                int a = pos[i], b = pos[j];
                out |= std::uint64_t(1) << pair_bit(std::min(a, b), std::max(a, b));
            }
    return out;
}

}  // namespace specrank::smallgraphs
