#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgk/domain.hpp"
#include "sgk/error.hpp"
#include "sgk/ops.hpp"
#include "sgk/parallel.hpp"
#include "sgk/sparse.hpp"

// The nine primitives. Every kernel is pure: inputs are taken by const reference and
// results are freshly built, validated containers. Kernels driven by a semiring (or
// monoid) never store a result equal to its zero.

namespace sgk {

enum class Axis { rows, cols };
enum class Transpose { no, yes };

namespace detail {

inline constexpr Index no_index = std::numeric_limits<Index>::max();

// Either borrows `m` or owns a reoriented copy of it.
template <Scalar T>
class Oriented {
public:
    Oriented(const CompressedMatrix<T>& m, Orientation o) : borrowed_(&m) {
        if (m.orientation() != o) owned_ = reorient(m, o);
    }
    Oriented(const Oriented&) = delete;
    Oriented& operator=(const Oriented&) = delete;

    const CompressedMatrix<T>& get() const { return owned_ ? *owned_ : *borrowed_; }

private:
    const CompressedMatrix<T>* borrowed_;
    std::optional<CompressedMatrix<T>> owned_;
};

inline std::string shape(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

[[noreturn]] inline void dimension_mismatch(const std::string& what) {
    throw Error(ErrorCode::dimension_mismatch, what);
}

// Per-chunk output of a row-partitioned kernel.
template <Scalar T>
struct RowBlock {
    std::vector<Index> counts;
    std::vector<Index> minor;
    std::vector<T> values;
};

template <Scalar T>
CompressedMatrix<T> stitch(Index nrows, Index ncols, Orientation o, std::vector<RowBlock<T>>& blocks,
                           MatrixDescriptor desc) {
    const Index major = o == Orientation::row ? nrows : ncols;
    std::vector<Index> offsets;
    offsets.reserve(major + 1);
    offsets.push_back(0);
    std::vector<Index> minor;
    std::vector<T> values;
    for (auto& b : blocks) {
        for (Index c : b.counts) offsets.push_back(offsets.back() + c);
        minor.insert(minor.end(), b.minor.begin(), b.minor.end());
        values.insert(values.end(), b.values.begin(), b.values.end());
    }
    // Zero major dimension leaves no blocks.
    while (offsets.size() < major + 1) offsets.push_back(offsets.back());
    return CompressedMatrix<T>(nrows, ncols, o, std::move(offsets), std::move(minor), std::move(values), desc);
}

inline void check_index_list(const std::vector<Index>& list, Index bound, const char* what) {
    std::vector<char> seen(bound, 0);
    for (std::size_t k = 0; k < list.size(); ++k) {
        if (list[k] >= bound)
            throw Error(ErrorCode::index_out_of_range, std::string(what) + "[" + std::to_string(k) +
                                                           "] = " + std::to_string(list[k]) +
                                                           " is out of range (bound " + std::to_string(bound) + ")");
        if (seen[list[k]])
            throw Error(ErrorCode::duplicate_index,
                        std::string(what) + " repeats index " + std::to_string(list[k]));
        seen[list[k]] = 1;
    }
}

// Large enough that thread start-up is amortized.
inline bool worth_parallel(Index work) { return work >= (Index{1} << 15); }

}  // namespace detail

/**
 * C = A (+.x) B over semiring `s`, row-wise Gustavson with a sparse accumulator. Terms of
 * each C(i,k) are accumulated in increasing j, the same order for any thread count.
 * Result is row-oriented.
 */
template <Scalar T>
CompressedMatrix<T> mxm(const CompressedMatrix<T>& A, const CompressedMatrix<T>& B, const Semiring<T>& s) {
    if (A.ncols() != B.nrows())
        detail::dimension_mismatch("mxm: " + detail::shape(A.nrows(), A.ncols()) + " times " +
                                   detail::shape(B.nrows(), B.ncols()));
    detail::Oriented<T> ao(A, Orientation::row);
    detail::Oriented<T> bo(B, Orientation::row);
    const auto& a = ao.get();
    const auto& b = bo.get();
    const Index n = A.nrows();
    const Index m = B.ncols();
    const T& zero = s.zero();

    const std::size_t chunks = detail::chunk_count_for(n, detail::worth_parallel(a.nvals() + b.nvals()));
    std::vector<detail::RowBlock<T>> blocks(chunks);
    detail::parallel_chunks(n, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
        auto& out = blocks[c];
        std::vector<T> acc(m);
        std::vector<Index> mark(m, detail::no_index);
        std::vector<Index> touched;
        const auto& aoff = a.offsets();
        const auto& boff = b.offsets();
        for (Index i = begin; i < end; ++i) {
            touched.clear();
            for (Index ka = aoff[i]; ka < aoff[i + 1]; ++ka) {
                const Index j = a.minor_indices()[ka];
                const T av = a.values()[ka];
                for (Index kb = boff[j]; kb < boff[j + 1]; ++kb) {
                    const Index k = b.minor_indices()[kb];
                    T prod = s.mul(av, b.values()[kb]);
                    if (mark[k] != i) {
                        mark[k] = i;
                        acc[k] = std::move(prod);
                        touched.push_back(k);
                    } else {
                        acc[k] = s.add(acc[k], prod);
                    }
                }
            }
            std::sort(touched.begin(), touched.end());
            Index count = 0;
            for (Index k : touched) {
                if (acc[k] == zero) continue;
                out.minor.push_back(k);
                out.values.push_back(acc[k]);
                ++count;
            }
            out.counts.push_back(count);
        }
    });
    return detail::stitch(n, m, Orientation::row, blocks, {});
}

/**
 * w = A' (+.x) v where A' is A, or A^T when `t` is Transpose::yes. With the edge
 * convention A(i,j) = edge i->j, mxv(A, frontier, s, Transpose::yes) advances a frontier
 * along out-edges.
 */
template <Scalar T>
SparseVector<T> mxv(const CompressedMatrix<T>& A, const SparseVector<T>& v, const Semiring<T>& s,
                    Transpose t = Transpose::no) {
    const bool tr = t == Transpose::yes;
    const Index out_len = tr ? A.ncols() : A.nrows();
    const Index in_len = tr ? A.nrows() : A.ncols();
    if (v.size() != in_len)
        detail::dimension_mismatch("mxv: matrix " + detail::shape(A.nrows(), A.ncols()) +
                                   (tr ? " (transposed)" : "") + " times vector of length " +
                                   std::to_string(v.size()));
    const T& zero = s.zero();
    const auto& off = A.offsets();
    const auto& minor = A.minor_indices();
    const auto& vals = A.values();
    std::vector<Index> out_idx;
    std::vector<T> out_val;

    // Storage slices are rows of A' when A is CSR and untransposed, or CSC and transposed.
    const bool slices_are_output = (A.orientation() == Orientation::row) != tr;
    if (slices_are_output) {
        std::vector<T> dense(in_len);
        std::vector<char> present(in_len, 0);
        for (Index k = 0; k < v.nvals(); ++k) {
            dense[v.indices()[k]] = v.values()[k];
            present[v.indices()[k]] = 1;
        }
        for (Index i = 0; i < out_len; ++i) {
            std::optional<T> acc;
            for (Index k = off[i]; k < off[i + 1]; ++k) {
                const Index j = minor[k];
                if (!present[j]) continue;
                T prod = s.mul(vals[k], dense[j]);
                acc = acc ? s.add(*acc, prod) : std::move(prod);
            }
            if (acc && !(*acc == zero)) {
                out_idx.push_back(i);
                out_val.push_back(std::move(*acc));
            }
        }
    } else {
        std::vector<T> acc(out_len);
        std::vector<char> hit(out_len, 0);
        std::vector<Index> touched;
        for (Index e = 0; e < v.nvals(); ++e) {
            const Index j = v.indices()[e];
            const T& vj = v.values()[e];
            for (Index k = off[j]; k < off[j + 1]; ++k) {
                const Index i = minor[k];
                T prod = s.mul(vals[k], vj);
                if (!hit[i]) {
                    hit[i] = 1;
                    acc[i] = std::move(prod);
                    touched.push_back(i);
                } else {
                    acc[i] = s.add(acc[i], prod);
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        for (Index i : touched) {
            if (acc[i] == zero) continue;
            out_idx.push_back(i);
            out_val.push_back(acc[i]);
        }
    }
    return SparseVector<T>(out_len, std::move(out_idx), std::move(out_val));
}

/// Element-wise product on the intersection of the two patterns. Result keeps A's orientation.
template <Scalar T>
CompressedMatrix<T> ewise_mult(const CompressedMatrix<T>& A, const CompressedMatrix<T>& B, const BinaryOp<T>& op) {
    if (A.nrows() != B.nrows() || A.ncols() != B.ncols())
        detail::dimension_mismatch("ewise_mult: " + detail::shape(A.nrows(), A.ncols()) + " vs " +
                                   detail::shape(B.nrows(), B.ncols()));
    detail::Oriented<T> bo(B, A.orientation());
    const auto& b = bo.get();
    std::vector<Index> offsets{0};
    offsets.reserve(A.major_dim() + 1);
    std::vector<Index> minor;
    std::vector<T> values;
    for (Index s = 0; s < A.major_dim(); ++s) {
        Index ka = A.offsets()[s];
        Index kb = b.offsets()[s];
        const Index ea = A.offsets()[s + 1];
        const Index eb = b.offsets()[s + 1];
        while (ka < ea && kb < eb) {
            const Index ja = A.minor_indices()[ka];
            const Index jb = b.minor_indices()[kb];
            if (ja < jb) {
                ++ka;
            } else if (jb < ja) {
                ++kb;
            } else {
                minor.push_back(ja);
                values.push_back(op(A.values()[ka], b.values()[kb]));
                ++ka;
                ++kb;
            }
        }
        offsets.push_back(minor.size());
    }
    MatrixDescriptor desc{A.descriptor().symmetric && B.descriptor().symmetric};
    return CompressedMatrix<T>(A.nrows(), A.ncols(), A.orientation(), std::move(offsets), std::move(minor),
                               std::move(values), desc);
}

/// Folds each row (Axis::rows) or column (Axis::cols) with `m`. Empty slices and results equal
/// to the monoid identity produce no entry.
template <Scalar T>
SparseVector<T> reduce(const CompressedMatrix<T>& A, const Monoid<T>& m, Axis axis) {
    const bool by_rows = axis == Axis::rows;
    const Index len = by_rows ? A.nrows() : A.ncols();
    const auto& off = A.offsets();
    const auto& minor = A.minor_indices();
    const auto& vals = A.values();
    std::vector<Index> idx;
    std::vector<T> out;
    if (by_rows == (A.orientation() == Orientation::row)) {
        for (Index s = 0; s < len; ++s) {
            if (off[s] == off[s + 1]) continue;
            T acc = vals[off[s]];
            for (Index k = off[s] + 1; k < off[s + 1]; ++k) acc = m(acc, vals[k]);
            if (acc == m.identity) continue;
            idx.push_back(s);
            out.push_back(std::move(acc));
        }
    } else {
        std::vector<T> acc(len);
        std::vector<char> hit(len, 0);
        for (Index s = 0; s < A.major_dim(); ++s) {
            for (Index k = off[s]; k < off[s + 1]; ++k) {
                const Index i = minor[k];
                if (!hit[i]) {
                    hit[i] = 1;
                    acc[i] = vals[k];
                } else {
                    acc[i] = m(acc[i], vals[k]);
                }
            }
        }
        for (Index i = 0; i < len; ++i) {
            if (!hit[i] || acc[i] == m.identity) continue;
            idx.push_back(i);
            out.push_back(acc[i]);
        }
    }
    return SparseVector<T>(len, std::move(idx), std::move(out));
}

/// Folds every stored entry of `v` with `m`; the identity for an empty vector.
template <Scalar T>
T reduce(const SparseVector<T>& v, const Monoid<T>& m) {
    T acc = m.identity;
    for (const T& x : v.values()) acc = m(acc, x);
    return acc;
}

/**
 * B(p, q) = A(rows[p], cols[q]). Index lists may be in any order, so this also permutes
 * and relabels. Result keeps A's orientation.
 */
template <Scalar T>
CompressedMatrix<T> subref(const CompressedMatrix<T>& A, const std::vector<Index>& rows,
                           const std::vector<Index>& cols) {
    detail::check_index_list(rows, A.nrows(), "rows");
    detail::check_index_list(cols, A.ncols(), "cols");
    detail::Oriented<T> ao(A, Orientation::row);
    const auto& a = ao.get();
    std::vector<Index> colmap(A.ncols(), detail::no_index);
    for (Index q = 0; q < cols.size(); ++q) colmap[cols[q]] = q;

    std::vector<Index> offsets{0};
    offsets.reserve(rows.size() + 1);
    std::vector<Index> minor;
    std::vector<T> values;
    std::vector<std::pair<Index, T>> row;
    for (Index i : rows) {
        row.clear();
        for (Index k = a.offsets()[i]; k < a.offsets()[i + 1]; ++k) {
            const Index q = colmap[a.minor_indices()[k]];
            if (q != detail::no_index) row.emplace_back(q, a.values()[k]);
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [q, v] : row) {
            minor.push_back(q);
            values.push_back(v);
        }
        offsets.push_back(minor.size());
    }
    MatrixDescriptor desc{A.descriptor().symmetric && rows == cols};
    CompressedMatrix<T> out(rows.size(), cols.size(), Orientation::row, std::move(offsets), std::move(minor),
                            std::move(values), desc);
    return A.orientation() == Orientation::row ? out : reorient(out, A.orientation());
}

/**
 * Replace-semantics sub-assignment: every position (rows[p], cols[q]) of C takes B(p, q),
 * becoming implicit where B has no entry. Positions outside rows x cols are unchanged.
 */
template <Scalar T>
CompressedMatrix<T> subassign(const CompressedMatrix<T>& C, const std::vector<Index>& rows,
                              const std::vector<Index>& cols, const CompressedMatrix<T>& B) {
    if (rows.size() != B.nrows() || cols.size() != B.ncols())
        detail::dimension_mismatch("subassign: block is " + detail::shape(B.nrows(), B.ncols()) +
                                   " but index lists select " + detail::shape(rows.size(), cols.size()));
    detail::check_index_list(rows, C.nrows(), "rows");
    detail::check_index_list(cols, C.ncols(), "cols");
    detail::Oriented<T> co(C, Orientation::row);
    detail::Oriented<T> bo(B, Orientation::row);
    const auto& c = co.get();
    const auto& b = bo.get();
    std::vector<Index> rowpos(C.nrows(), detail::no_index);
    for (Index p = 0; p < rows.size(); ++p) rowpos[rows[p]] = p;
    std::vector<char> selected_col(C.ncols(), 0);
    for (Index j : cols) selected_col[j] = 1;

    std::vector<Index> offsets{0};
    offsets.reserve(C.nrows() + 1);
    std::vector<Index> minor;
    std::vector<T> values;
    std::vector<std::pair<Index, T>> row;
    for (Index i = 0; i < C.nrows(); ++i) {
        const Index p = rowpos[i];
        if (p == detail::no_index) {
            for (Index k = c.offsets()[i]; k < c.offsets()[i + 1]; ++k) {
                minor.push_back(c.minor_indices()[k]);
                values.push_back(c.values()[k]);
            }
        } else {
            row.clear();
            for (Index k = c.offsets()[i]; k < c.offsets()[i + 1]; ++k) {
                if (!selected_col[c.minor_indices()[k]]) row.emplace_back(c.minor_indices()[k], c.values()[k]);
            }
            for (Index k = b.offsets()[p]; k < b.offsets()[p + 1]; ++k)
                row.emplace_back(cols[b.minor_indices()[k]], b.values()[k]);
            std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [j, v] : row) {
                minor.push_back(j);
                values.push_back(v);
            }
        }
        offsets.push_back(minor.size());
    }
    CompressedMatrix<T> out(C.nrows(), C.ncols(), Orientation::row, std::move(offsets), std::move(minor),
                            std::move(values), {});
    return C.orientation() == Orientation::row ? out : reorient(out, C.orientation());
}

/**
 * Per-vertex edge weighting: A'(i,j) = op(A(i,j), d(i)) for Axis::rows, op(A(i,j), d(j)) for
 * Axis::cols. Entries whose factor is absent from d are dropped.
 */
template <Scalar T>
CompressedMatrix<T> scale_matrix(const CompressedMatrix<T>& A, const SparseVector<T>& d, const BinaryOp<T>& op,
                                 Axis axis) {
    const Index expected = axis == Axis::rows ? A.nrows() : A.ncols();
    if (d.size() != expected)
        detail::dimension_mismatch("scale_matrix: vector of length " + std::to_string(d.size()) + " for a " +
                                   detail::shape(A.nrows(), A.ncols()) + " matrix");
    std::vector<T> dense(expected);
    std::vector<char> present(expected, 0);
    for (Index k = 0; k < d.nvals(); ++k) {
        dense[d.indices()[k]] = d.values()[k];
        present[d.indices()[k]] = 1;
    }
    // Factor is indexed by the major slice when the scaled axis matches the orientation.
    const bool by_major = (axis == Axis::rows) == (A.orientation() == Orientation::row);
    std::vector<Index> offsets{0};
    offsets.reserve(A.major_dim() + 1);
    std::vector<Index> minor;
    std::vector<T> values;
    for (Index s = 0; s < A.major_dim(); ++s) {
        for (Index k = A.offsets()[s]; k < A.offsets()[s + 1]; ++k) {
            const Index f = by_major ? s : A.minor_indices()[k];
            if (!present[f]) continue;
            minor.push_back(A.minor_indices()[k]);
            values.push_back(op(A.values()[k], dense[f]));
        }
        offsets.push_back(minor.size());
    }
    return CompressedMatrix<T>(A.nrows(), A.ncols(), A.orientation(), std::move(offsets), std::move(minor),
                               std::move(values), {});
}

/// Per-vertex weighting on the intersection of the two patterns; also the masking primitive.
template <Scalar T>
SparseVector<T> scale_vector(const SparseVector<T>& v, const SparseVector<T>& w, const BinaryOp<T>& op) {
    if (v.size() != w.size())
        detail::dimension_mismatch("scale_vector: lengths " + std::to_string(v.size()) + " and " +
                                   std::to_string(w.size()));
    std::vector<Index> idx;
    std::vector<T> vals;
    Index a = 0, b = 0;
    while (a < v.nvals() && b < w.nvals()) {
        const Index ia = v.indices()[a];
        const Index ib = w.indices()[b];
        if (ia < ib) {
            ++a;
        } else if (ib < ia) {
            ++b;
        } else {
            idx.push_back(ia);
            vals.push_back(op(v.values()[a], w.values()[b]));
            ++a;
            ++b;
        }
    }
    return SparseVector<T>(v.size(), std::move(idx), std::move(vals));
}

/// Maps every stored value through f. When `drop` is given, results equal to it are removed.
template <Scalar In, Scalar Out>
CompressedMatrix<Out> apply_unary(const CompressedMatrix<In>& A, const UnaryOp<In, Out>& f,
                                  std::optional<Out> drop = std::nullopt) {
    std::vector<Index> offsets{0};
    offsets.reserve(A.major_dim() + 1);
    std::vector<Index> minor;
    std::vector<Out> values;
    minor.reserve(A.nvals());
    values.reserve(A.nvals());
    for (Index s = 0; s < A.major_dim(); ++s) {
        for (Index k = A.offsets()[s]; k < A.offsets()[s + 1]; ++k) {
            Out y = f(A.values()[k]);
            if (drop && y == *drop) continue;
            minor.push_back(A.minor_indices()[k]);
            values.push_back(std::move(y));
        }
        offsets.push_back(minor.size());
    }
    return CompressedMatrix<Out>(A.nrows(), A.ncols(), A.orientation(), std::move(offsets), std::move(minor),
                                 std::move(values), A.descriptor());
}

template <Scalar In, Scalar Out>
SparseVector<Out> apply_unary(const SparseVector<In>& v, const UnaryOp<In, Out>& f,
                              std::optional<Out> drop = std::nullopt) {
    std::vector<Index> idx;
    std::vector<Out> vals;
    idx.reserve(v.nvals());
    vals.reserve(v.nvals());
    for (Index k = 0; k < v.nvals(); ++k) {
        Out y = f(v.values()[k]);
        if (drop && y == *drop) continue;
        idx.push_back(v.indices()[k]);
        vals.push_back(std::move(y));
    }
    return SparseVector<Out>(v.size(), std::move(idx), std::move(vals));
}

}  // namespace sgk
