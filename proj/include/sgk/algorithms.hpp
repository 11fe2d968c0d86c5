#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sgk/domain.hpp"
#include "sgk/error.hpp"
#include "sgk/kernels.hpp"
#include "sgk/ops.hpp"
#include "sgk/semiring_registry.hpp"
#include "sgk/sparse.hpp"

// Graph algorithms built only from the kernels, sparse-core construction/conversion and
// registry semirings. Nothing here reads compressed storage arrays directly.
//
// Convention: A(i,j) stored <=> edge i -> j.

namespace sgk {

/// Real-valued (non-complex) domains accepted by the graph algorithms.
template <class T>
concept GraphScalar = OrderedScalar<T>;

struct BfsResult {
    SparseVector<std::int64_t> levels;
    Index reached = 0;
};

struct PageRankResult {
    SparseVector<double> ranks;
    Index iterations = 0;
    double residual = 0.0;  // L1 change of the last iteration
};

enum class Direction { in, out };

namespace graph_detail {

template <Scalar T>
void require_square(const CompressedMatrix<T>& A, const char* who) {
    if (A.nrows() != A.ncols())
        throw Error(ErrorCode::non_square, std::string(who) + " requires a square adjacency matrix, got " +
                                               std::to_string(A.nrows()) + "x" + std::to_string(A.ncols()));
}

template <Scalar P, Scalar T>
CompressedMatrix<P> pattern(const CompressedMatrix<T>& A, P one) {
    return apply_unary(A, ops::constant<T, P>(one));
}

template <Scalar T>
CompressedMatrix<T> identity_matrix(Index n, T value, Orientation o = Orientation::row) {
    std::vector<Triple<T>> diag;
    diag.reserve(n);
    for (Index i = 0; i < n; ++i) diag.push_back({i, i, value});
    return to_compressed(CooMatrix<T>(n, n, std::move(diag), {true}), o);
}

/// A with a stored diagonal; existing diagonal entries are combined with `value` through `dup`.
template <Scalar T>
CompressedMatrix<T> with_diagonal(const CompressedMatrix<T>& A, T value, const Monoid<T>& dup) {
    std::vector<Triple<T>> triples = to_tuples(A).triples();
    for (Index i = 0; i < A.nrows(); ++i) triples.push_back({i, i, value});
    auto coo = build_from_triples(A.nrows(), A.ncols(), std::move(triples), dup, A.descriptor());
    return to_compressed(coo, A.orientation());
}

/// Equal pattern and values, decided with scale_vector + reduce.
template <OrderedScalar T>
bool same_vector(const SparseVector<T>& a, const SparseVector<T>& b) {
    if (a.size() != b.size() || a.nvals() != b.nvals()) return false;
    auto diff = scale_vector(a, b, ops::not_equal<T>());
    if (diff.nvals() != a.nvals()) return false;
    return diff.empty() || reduce(diff, ops::max_monoid<T>()) == T(0);
}

/// Validated sources as a boolean indicator vector.
inline SparseVector<bool> source_indicator(Index n, const std::vector<Index>& sources) {
    if (sources.empty()) throw Error(ErrorCode::empty_sources, "at least one source vertex is required");
    std::vector<std::pair<Index, bool>> entries;
    entries.reserve(sources.size());
    for (Index s : sources) entries.emplace_back(s, true);
    auto v = build_vector(n, std::move(entries), ops::lor_monoid());
    if (v.nvals() != sources.size()) throw Error(ErrorCode::duplicate_index, "source list contains duplicates");
    return v;
}

/// Undirected simple-graph pattern with unit int64 values; rejects asymmetric input and self-loops.
template <GraphScalar T>
CompressedMatrix<std::int64_t> undirected_pattern(const CompressedMatrix<T>& A, const char* who) {
    require_square(A, who);
    auto P = pattern<std::int64_t>(A, std::int64_t{1});
    if (!is_symmetric(P))
        throw Error(ErrorCode::not_symmetric, std::string(who) + " requires an undirected (symmetric) graph");
    auto loops = ewise_mult(P, identity_matrix<std::int64_t>(A.nrows(), 1, P.orientation()),
                            ops::times<std::int64_t>());
    if (loops.nvals() != 0)
        throw Error(ErrorCode::self_loop, std::string(who) + " requires a graph without self-loops");
    return P;
}

/// Per-vertex count of closed ordered wedges, i.e. 2 * triangles through each vertex.
inline SparseVector<std::int64_t> closed_wedges(const CompressedMatrix<std::int64_t>& P) {
    const auto plus_times = registry_get<std::int64_t>("plus_times");
    auto paths2 = mxm(P, P, plus_times);
    auto closed = ewise_mult(P, paths2, ops::times<std::int64_t>());
    return reduce(closed, ops::plus_monoid<std::int64_t>(), Axis::rows);
}

}  // namespace graph_detail

/// In- or out-degree of every vertex (edge counts; vertices of degree 0 are absent).
template <GraphScalar T>
SparseVector<std::int64_t> degrees(const CompressedMatrix<T>& A, Direction dir) {
    auto P = graph_detail::pattern<std::int64_t>(A, std::int64_t{1});
    return reduce(P, ops::plus_monoid<std::int64_t>(), dir == Direction::out ? Axis::rows : Axis::cols);
}

/**
 * Level-synchronous BFS from one or more sources. Each level is one or_and mxv over the
 * transposed pattern, masked by the explicit unvisited indicator via scale_vector.
 */
template <GraphScalar T>
BfsResult bfs(const CompressedMatrix<T>& A, const std::vector<Index>& sources) {
    graph_detail::require_square(A, "bfs");
    const Index n = A.nrows();
    auto frontier = graph_detail::source_indicator(n, sources);
    const auto adj = graph_detail::pattern<bool>(A, true);
    const auto or_and = registry_get<bool>("or_and");
    const auto land = ops::land();

    std::vector<std::pair<Index, std::int64_t>> levels;
    for (Index v : frontier.indices()) levels.emplace_back(v, 0);
    auto unvisited = pattern_complement(frontier);

    for (std::int64_t depth = 1;; ++depth) {
        if (static_cast<Index>(depth) > n) throw Error(ErrorCode::internal_invariant, "bfs exceeded n levels");
        frontier = scale_vector(mxv(adj, frontier, or_and, Transpose::yes), unvisited, land);
        if (frontier.empty()) break;
        unvisited = scale_vector(unvisited, pattern_complement(frontier), land);
        for (Index v : frontier.indices()) levels.emplace_back(v, depth);
    }
    BfsResult out;
    out.levels = build_vector(n, std::move(levels), ops::min_monoid<std::int64_t>());
    out.reached = out.levels.nvals();
    return out;
}

/**
 * Single-source shortest paths as Bellman-Ford over min_plus. A zero-weight self-loop on
 * every vertex makes each mxv pass keep the current distances (min with the relaxations),
 * so the iteration is monotone and stops at its fixed point. Unreachable vertices are absent.
 */
template <WeightScalar T>
SparseVector<T> sssp_minplus(const CompressedMatrix<T>& A, Index source) {
    graph_detail::require_square(A, "sssp");
    const Index n = A.nrows();
    if (source >= n)
        throw Error(ErrorCode::index_out_of_range,
                    "source " + std::to_string(source) + " is out of range for " + std::to_string(n) + " vertices");
    if constexpr (std::is_signed_v<T> || std::is_floating_point_v<T>) {
        auto row_min = reduce(A, ops::min_monoid<T>(), Axis::rows);
        if (!row_min.empty() && reduce(row_min, ops::min_monoid<T>()) < T(0))
            throw Error(ErrorCode::negative_weight, "sssp requires non-negative edge weights");
    }
    const auto min_plus = registry_get<T>("min_plus");
    const auto G = graph_detail::with_diagonal(A, T(0), ops::min_monoid<T>());

    SparseVector<T> dist(n, {source}, {T(0)});
    // n-1 relaxation passes suffice; one more confirms the fixed point.
    for (Index pass = 0;; ++pass) {
        if (pass >= std::max<Index>(n, 1))
            throw Error(ErrorCode::internal_invariant, "sssp did not reach a fixed point in n passes");
        auto next = mxv(G, dist, min_plus, Transpose::yes);
        if (graph_detail::same_vector(next, dist)) break;
        dist = std::move(next);
    }
    return dist;
}

/**
 * Connected components of an undirected graph by min-label propagation: labels start as
 * vertex ids and each pass takes the minimum over the closed neighbourhood (min_select2nd
 * mxv on the pattern with self-loops, merged with the previous labels by min). Converged
 * labels are the smallest vertex id in each component.
 */
template <GraphScalar T>
SparseVector<std::int64_t> connected_components(const CompressedMatrix<T>& A) {
    graph_detail::require_square(A, "connected_components");
    const Index n = A.nrows();
    if (!is_symmetric(graph_detail::pattern<bool>(A, true)))
        throw Error(ErrorCode::not_symmetric, "connected_components requires an undirected (symmetric) graph");
    const auto G = graph_detail::with_diagonal(graph_detail::pattern<std::int64_t>(A, std::int64_t{1}),
                                               std::int64_t{1}, ops::max_monoid<std::int64_t>());
    const auto min_select2nd = registry_get<std::int64_t>("min_select2nd");
    const auto min = ops::min<std::int64_t>();

    std::vector<std::pair<Index, std::int64_t>> ids;
    ids.reserve(n);
    for (Index i = 0; i < n; ++i) ids.emplace_back(i, static_cast<std::int64_t>(i));
    auto labels = build_vector(n, std::move(ids), ops::min_monoid<std::int64_t>());

    for (Index pass = 0;; ++pass) {
        if (pass >= std::max<Index>(n, 1))
            throw Error(ErrorCode::internal_invariant, "label propagation did not converge in n passes");
        auto next = scale_vector(mxv(G, labels, min_select2nd), labels, min);
        if (graph_detail::same_vector(next, labels)) break;
        labels = std::move(next);
    }
    return labels;
}

/// Number of distinct labels, i.e. vertices that are their own component representative.
inline Index component_count(const SparseVector<std::int64_t>& labels) {
    std::vector<std::pair<Index, std::int64_t>> ids;
    ids.reserve(labels.size());
    for (Index i = 0; i < labels.size(); ++i) ids.emplace_back(i, static_cast<std::int64_t>(i));
    auto self = build_vector(labels.size(), std::move(ids), ops::min_monoid<std::int64_t>());
    auto differs = scale_vector(labels, self, ops::not_equal<std::int64_t>());
    return apply_unary(differs, ops::identity_op<std::int64_t>(), std::optional<std::int64_t>{1}).nvals();
}

/// Triangles in an undirected simple graph: sum(A .* (A A)) / 6 under plus_times.
template <GraphScalar T>
Index triangle_count(const CompressedMatrix<T>& A) {
    auto P = graph_detail::undirected_pattern(A, "triangle_count");
    auto per_vertex = graph_detail::closed_wedges(P);
    return static_cast<Index>(reduce(per_vertex, ops::plus_monoid<std::int64_t>())) / 6;
}

/**
 * Local clustering coefficient tri(i) / (d(i)(d(i)-1)/2). Vertices with degree < 2 have no
 * coefficient; vertices whose wedges are all open have coefficient 0 and, like every
 * implicit value, are not stored.
 */
template <GraphScalar T>
SparseVector<double> clustering_coefficients(const CompressedMatrix<T>& A) {
    auto P = graph_detail::undirected_pattern(A, "clustering_coefficients");
    auto closed = graph_detail::closed_wedges(P);
    auto deg = reduce(P, ops::plus_monoid<std::int64_t>(), Axis::rows);
    // Both numerator and denominator are doubled; the factor cancels.
    auto open = apply_unary(deg,
                            UnaryOp<std::int64_t>{"d(d-1)", [](const std::int64_t& d) { return d * (d - 1); }},
                            std::optional<std::int64_t>{0});
    const auto to_double = ops::identity_op<std::int64_t, double>();
    return scale_vector(apply_unary(closed, to_double), apply_unary(open, to_double), ops::divide<double>());
}

/**
 * PageRank by power iteration v <- alpha P^T v + (1 - alpha)/n with P the row-stochastic
 * transition matrix. The teleport term is carried by an extra source vertex n whose value
 * stays 1 and whose out-edges weigh (1 - alpha)/n, so one plus_times mxv over the
 * augmented (n+1)x(n+1) matrix performs a full step and reaches every vertex, including
 * ones without in-edges. Dangling vertices are rejected. `on_iterate`, when set, sees the
 * rank vector after every step.
 */
template <GraphScalar T>
PageRankResult pagerank(const CompressedMatrix<T>& A, double alpha, Index max_iters, double tol,
                        const std::function<void(const SparseVector<double>&)>& on_iterate = {}) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::alpha_out_of_range, "alpha out of range (0,1)");
    graph_detail::require_square(A, "pagerank");
    const Index n = A.nrows();
    PageRankResult out;
    out.ranks = SparseVector<double>(n);
    if (n == 0) return out;

    const auto P0 = graph_detail::pattern<double>(A, 1.0);
    const auto out_degree = reduce(P0, ops::plus_monoid<double>(), Axis::rows);
    if (out_degree.nvals() != n) {
        Index first = pattern_complement(out_degree).indices().front();
        throw Error(ErrorCode::dangling_vertex, "vertex " + std::to_string(first) + " has no out-edges");
    }
    const auto inv_degree =
        apply_unary(out_degree, UnaryOp<double>{"inv", [](const double& d) { return 1.0 / d; }});
    const auto P = scale_matrix(P0, inv_degree, ops::times<double>(), Axis::rows);
    const auto damped = apply_unary(P, UnaryOp<double>{"damp", [alpha](const double& x) { return alpha * x; }});

    const Index teleport = n;
    std::vector<Triple<double>> triples = to_tuples(damped).triples();
    const double jump = (1.0 - alpha) / static_cast<double>(n);
    for (Index j = 0; j < n; ++j) triples.push_back({teleport, j, jump});
    triples.push_back({teleport, teleport, 1.0});
    const auto G = to_compressed(build_from_triples(n + 1, n + 1, std::move(triples), ops::plus_monoid<double>()));

    std::vector<std::pair<Index, double>> start;
    for (Index i = 0; i < n; ++i) start.emplace_back(i, 1.0 / static_cast<double>(n));
    start.emplace_back(teleport, 1.0);
    auto v = build_vector(n + 1, std::move(start), ops::plus_monoid<double>());

    std::vector<Triple<double>> select;
    for (Index i = 0; i < n; ++i) select.push_back({i, i, 1.0});
    const auto S = to_compressed(CooMatrix<double>(n, n + 1, std::move(select)));

    const auto plus_times = registry_get<double>("plus_times");
    out.residual = std::numeric_limits<double>::infinity();
    while (out.iterations < max_iters) {
        auto next = mxv(G, v, plus_times, Transpose::yes);
        out.residual = reduce(scale_vector(next, v, ops::abs_diff<double>()), ops::plus_monoid<double>());
        v = std::move(next);
        ++out.iterations;
        if (on_iterate) on_iterate(mxv(S, v, plus_times));
        if (out.residual <= tol) break;
    }
    out.ranks = mxv(S, v, plus_times);
    return out;
}

}  // namespace sgk
