#pragma once

// Textbook graph algorithms on adjacency lists, used to check the linear-algebra versions.

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "sgk/domain.hpp"

namespace sgk::oracle {

using AdjacencyLists = std::vector<std::vector<Index>>;
using EdgeList = std::vector<std::pair<Index, Index>>;

template <class W>
using WeightedAdjacency = std::vector<std::vector<std::pair<Index, W>>>;

/// Hop distance from the nearest source; -1 when unreachable.
std::vector<std::int64_t> bfs_levels(const AdjacencyLists& out_edges, const std::vector<Index>& sources);

/// Component label = smallest vertex id in the component (union-find).
std::vector<Index> component_labels(Index n, const EdgeList& undirected_edges);

/// Triangles by enumerating every vertex triple i < j < k.
std::uint64_t triangle_count(Index n, const EdgeList& undirected_edges);

/// Local clustering coefficient by wedge enumeration; nullopt for degree < 2.
std::vector<std::optional<double>> clustering(Index n, const EdgeList& undirected_edges);

/// Dense power iteration v <- alpha P^T v + (1-alpha)/n, stopping when the L1 change <= tol.
std::vector<double> pagerank(const AdjacencyLists& out_edges, double alpha, std::size_t max_iters, double tol);

/// Dijkstra with a binary heap; nullopt when unreachable.
template <class W>
std::vector<std::optional<W>> shortest_paths(const WeightedAdjacency<W>& out_edges, Index source) {
    std::vector<std::optional<W>> dist(out_edges.size());
    using Item = std::pair<W, Index>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[source] = W(0);
    heap.push({W(0), source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d != *dist[u]) continue;
        for (const auto& [v, w] : out_edges[u]) {
            W nd = d + w;
            if (!dist[v] || nd < *dist[v]) {
                dist[v] = nd;
                heap.push({nd, v});
            }
        }
    }
    return dist;
}

}  // namespace sgk::oracle
