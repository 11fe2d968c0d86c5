#include "sgk/oracle/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace sgk::oracle {

std::vector<std::int64_t> bfs_levels(const AdjacencyLists& out_edges, const std::vector<Index>& sources) {
    std::vector<std::int64_t> level(out_edges.size(), -1);
    std::deque<Index> queue;
    for (Index s : sources) {
        if (level[s] == -1) {
            level[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Index u = queue.front();
        queue.pop_front();
        for (Index v : out_edges[u]) {
            if (level[v] == -1) {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return level;
}

namespace {

struct UnionFind {
    std::vector<Index> parent;
    explicit UnionFind(Index n) : parent(n) { std::iota(parent.begin(), parent.end(), Index{0}); }
    Index find(Index x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Keeps the smaller id as root so roots are component minima.
    void unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }
};

std::vector<std::vector<char>> adjacency_matrix(Index n, const EdgeList& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) {
        if (u == v) continue;
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    return adj;
}

}  // namespace

std::vector<Index> component_labels(Index n, const EdgeList& undirected_edges) {
    UnionFind uf(n);
    for (auto [u, v] : undirected_edges) uf.unite(u, v);
    std::vector<Index> labels(n);
    for (Index i = 0; i < n; ++i) labels[i] = uf.find(i);
    return labels;
}

std::uint64_t triangle_count(Index n, const EdgeList& undirected_edges) {
    auto adj = adjacency_matrix(n, undirected_edges);
    std::uint64_t count = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (adj[i][j])
                for (Index k = j + 1; k < n; ++k)
                    if (adj[j][k] && adj[i][k]) ++count;
    return count;
}

std::vector<std::optional<double>> clustering(Index n, const EdgeList& undirected_edges) {
    auto adj = adjacency_matrix(n, undirected_edges);
    std::vector<std::optional<double>> out(n);
    for (Index v = 0; v < n; ++v) {
        std::vector<Index> nbrs;
        for (Index u = 0; u < n; ++u)
            if (adj[v][u]) nbrs.push_back(u);
        const auto d = nbrs.size();
        if (d < 2) continue;
        std::uint64_t closed = 0;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b)
                if (adj[nbrs[a]][nbrs[b]]) ++closed;
        out[v] = static_cast<double>(closed) / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
    }
    return out;
}

std::vector<double> pagerank(const AdjacencyLists& out_edges, double alpha, std::size_t max_iters, double tol) {
    const std::size_t n = out_edges.size();
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    for (std::size_t it = 0; it < max_iters; ++it) {
        std::vector<double> next(n, (1.0 - alpha) / static_cast<double>(n));
        for (std::size_t u = 0; u < n; ++u) {
            const double share = alpha * v[u] / static_cast<double>(out_edges[u].size());
            for (Index w : out_edges[u]) next[w] += share;
        }
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) change += std::abs(next[i] - v[i]);
        v = std::move(next);
        if (change <= tol) break;
    }
    return v;
}

}  // namespace sgk::oracle
