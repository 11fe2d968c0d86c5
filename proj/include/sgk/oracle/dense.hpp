#pragma once

// Dense brute-force references for the sparse kernels. Implicit entries are stored as the
// fill value and every loop runs over the full index space.

#include <vector>

#include "sgk/domain.hpp"
#include "sgk/error.hpp"
#include "sgk/ops.hpp"
#include "sgk/sparse.hpp"

namespace sgk::oracle {

template <Scalar T>
struct DenseMatrix {
    Index nrows = 0;
    Index ncols = 0;
    T fill{};
    std::vector<T> data;  // row-major

    DenseMatrix() = default;
    DenseMatrix(Index r, Index c, T f) : nrows(r), ncols(c), fill(f), data(r * c, f) {}

    T get(Index i, Index j) const { return data[i * ncols + j]; }
    void set(Index i, Index j, T v) { data[i * ncols + j] = v; }
};

template <Scalar T>
struct DenseVector {
    T fill{};
    std::vector<T> data;

    DenseVector() = default;
    DenseVector(Index n, T f) : fill(f), data(n, f) {}
};

template <Scalar T>
DenseMatrix<T> densify(const CompressedMatrix<T>& m, const T& fill) {
    DenseMatrix<T> d(m.nrows(), m.ncols(), fill);
    const auto coo = to_tuples(m);
    for (const auto& t : coo.triples()) d.set(t.row, t.col, t.val);
    return d;
}

template <Scalar T>
DenseVector<T> densify(const SparseVector<T>& v, const T& fill) {
    DenseVector<T> d(v.size(), fill);
    for (Index k = 0; k < v.nvals(); ++k) d.data[v.indices()[k]] = v.values()[k];
    return d;
}

/// Drops every entry equal to the fill value.
template <Scalar T>
CooMatrix<T> sparsify(const DenseMatrix<T>& d) {
    std::vector<Triple<T>> triples;
    for (Index i = 0; i < d.nrows; ++i)
        for (Index j = 0; j < d.ncols; ++j)
            if (!(d.get(i, j) == d.fill)) triples.push_back({i, j, d.get(i, j)});
    return CooMatrix<T>(d.nrows, d.ncols, std::move(triples));
}

template <Scalar T>
SparseVector<T> sparsify(const DenseVector<T>& d) {
    std::vector<Index> idx;
    std::vector<T> vals;
    for (Index i = 0; i < d.data.size(); ++i) {
        if (d.data[i] == d.fill) continue;
        idx.push_back(i);
        vals.push_back(d.data[i]);
    }
    return SparseVector<T>(d.data.size(), std::move(idx), std::move(vals));
}

template <Scalar T>
DenseMatrix<T> dense_mxm(const DenseMatrix<T>& A, const DenseMatrix<T>& B, const Semiring<T>& s) {
    if (A.ncols != B.nrows) throw Error(ErrorCode::dimension_mismatch, "dense_mxm: inner dimensions differ");
    DenseMatrix<T> C(A.nrows, B.ncols, s.zero());
    for (Index i = 0; i < A.nrows; ++i) {
        for (Index k = 0; k < B.ncols; ++k) {
            T acc = s.zero();
            for (Index j = 0; j < A.ncols; ++j) acc = s.add(acc, s.mul(A.get(i, j), B.get(j, k)));
            C.set(i, k, acc);
        }
    }
    return C;
}

/// w(i) = add_j mul(A'(i,j), x(j)) with A' = A or its transpose.
template <Scalar T>
DenseVector<T> dense_mxv(const DenseMatrix<T>& A, const DenseVector<T>& x, const Semiring<T>& s, bool transpose) {
    const Index rows = transpose ? A.ncols : A.nrows;
    const Index inner = transpose ? A.nrows : A.ncols;
    if (x.data.size() != inner) throw Error(ErrorCode::dimension_mismatch, "dense_mxv: length mismatch");
    DenseVector<T> w(rows, s.zero());
    for (Index i = 0; i < rows; ++i) {
        T acc = s.zero();
        for (Index j = 0; j < inner; ++j) {
            const T a = transpose ? A.get(j, i) : A.get(i, j);
            acc = s.add(acc, s.mul(a, x.data[j]));
        }
        w.data[i] = acc;
    }
    return w;
}

/// op on positions where both operands differ from their fill; the fill elsewhere.
template <Scalar T>
DenseMatrix<T> dense_ewise(const DenseMatrix<T>& A, const DenseMatrix<T>& B, const BinaryOp<T>& op) {
    if (A.nrows != B.nrows || A.ncols != B.ncols)
        throw Error(ErrorCode::dimension_mismatch, "dense_ewise: shapes differ");
    DenseMatrix<T> C(A.nrows, A.ncols, A.fill);
    for (Index i = 0; i < A.nrows; ++i)
        for (Index j = 0; j < A.ncols; ++j)
            if (!(A.get(i, j) == A.fill) && !(B.get(i, j) == B.fill)) C.set(i, j, op(A.get(i, j), B.get(i, j)));
    return C;
}

/// Fold of every row (by_rows) or column starting from the monoid identity.
template <Scalar T>
DenseVector<T> dense_reduce(const DenseMatrix<T>& A, const Monoid<T>& m, bool by_rows) {
    const Index len = by_rows ? A.nrows : A.ncols;
    const Index other = by_rows ? A.ncols : A.nrows;
    DenseVector<T> out(len, m.identity);
    for (Index i = 0; i < len; ++i) {
        T acc = m.identity;
        for (Index j = 0; j < other; ++j) acc = m(acc, by_rows ? A.get(i, j) : A.get(j, i));
        out.data[i] = acc;
    }
    return out;
}

}  // namespace sgk::oracle
