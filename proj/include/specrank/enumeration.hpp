#pragma once

#include <cstdint>

#include "specrank/graph.hpp"

namespace specrank::smallgraphs {

/// Number of vertex pairs, i.e. bits in an edge mask.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Bit position of the pair {i, j}, i < j, in colexicographic order.
constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

/// Graph on n labeled vertices from an edge-subset mask (n <= 11).
UndirectedGraph from_mask(int n, std::uint64_t mask);

std::uint64_t to_mask(const UndirectedGraph& g);

bool mask_connected(int n, std::uint64_t mask);

/// Relabels vertices by a degree-profile heuristic (degree, then sorted
/// neighbor degrees) and returns the relabeled mask. Equal results imply
/// isomorphic graphs; the converse may fail, which only costs duplicate
/// work, never correctness.
std::uint64_t canonical_mask(int n, std::uint64_t mask);

}  // namespace specrank::smallgraphs
