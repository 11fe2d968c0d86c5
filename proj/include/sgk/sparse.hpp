#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgk/domain.hpp"
#include "sgk/error.hpp"
#include "sgk/ops.hpp"

namespace sgk {

enum class Orientation { row, col };

constexpr Orientation flipped(Orientation o) noexcept {
    return o == Orientation::row ? Orientation::col : Orientation::row;
}

struct MatrixDescriptor {
    bool symmetric = false;
    friend bool operator==(const MatrixDescriptor&, const MatrixDescriptor&) = default;
};

template <Scalar T>
struct Triple {
    Index row = 0;
    Index col = 0;
    T val{};
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Finalized tuple list: sorted by (row, col), no duplicate coordinates.
template <Scalar T>
class CooMatrix {
public:
    using value_type = T;

    CooMatrix() = default;
    CooMatrix(Index nrows, Index ncols) : nrows_(nrows), ncols_(ncols) {}

    /// Adopts already finalized triples; throws invalid_argument if they are not.
    CooMatrix(Index nrows, Index ncols, std::vector<Triple<T>> triples, MatrixDescriptor desc = {})
        : nrows_(nrows), ncols_(ncols), triples_(std::move(triples)), desc_(desc) {
        for (std::size_t k = 0; k < triples_.size(); ++k) {
            const auto& t = triples_[k];
            if (t.row >= nrows_ || t.col >= ncols_)
                throw Error(ErrorCode::index_out_of_range,
                            "triple " + std::to_string(k) + " lies outside the matrix");
            if (k > 0) {
                const auto& p = triples_[k - 1];
                if (std::pair{p.row, p.col} >= std::pair{t.row, t.col})
                    throw Error(ErrorCode::invalid_argument,
                                "triples are not sorted and unique at position " + std::to_string(k));
            }
        }
    }

    Index nrows() const noexcept { return nrows_; }
    Index ncols() const noexcept { return ncols_; }
    Index nvals() const noexcept { return triples_.size(); }
    const std::vector<Triple<T>>& triples() const noexcept { return triples_; }
    const MatrixDescriptor& descriptor() const noexcept { return desc_; }
    void set_descriptor(MatrixDescriptor d) noexcept { desc_ = d; }

    friend bool operator==(const CooMatrix&, const CooMatrix&) = default;

private:
    Index nrows_ = 0;
    Index ncols_ = 0;
    std::vector<Triple<T>> triples_;
    MatrixDescriptor desc_;
};

/**
 * CSR (row orientation) or CSC (col orientation) storage. The "major" dimension is
 * rows for CSR and columns for CSC; `offsets` has major+1 entries and each major slice
 * holds strictly increasing minor indices.
 */
template <Scalar T>
class CompressedMatrix {
public:
    using value_type = T;

    CompressedMatrix() : offsets_(1, 0) {}

    /// Empty matrix of the given shape.
    CompressedMatrix(Index nrows, Index ncols, Orientation o = Orientation::row)
        : nrows_(nrows), ncols_(ncols), orientation_(o), offsets_(major_of(nrows, ncols, o) + 1, 0) {}

    /// Adopts raw arrays; throws invalid_argument if they violate the storage invariants.
    CompressedMatrix(Index nrows, Index ncols, Orientation o, std::vector<Index> offsets,
                     std::vector<Index> minor, std::vector<T> values, MatrixDescriptor desc = {})
        : nrows_(nrows),
          ncols_(ncols),
          orientation_(o),
          offsets_(std::move(offsets)),
          minor_(std::move(minor)),
          values_(std::move(values)),
          desc_(desc) {
        if (auto problem = check()) throw Error(ErrorCode::invalid_argument, *problem);
    }

    Index nrows() const noexcept { return nrows_; }
    Index ncols() const noexcept { return ncols_; }
    Index nvals() const noexcept { return minor_.size(); }
    Orientation orientation() const noexcept { return orientation_; }
    Index major_dim() const noexcept { return major_of(nrows_, ncols_, orientation_); }
    Index minor_dim() const noexcept { return orientation_ == Orientation::row ? ncols_ : nrows_; }
    const MatrixDescriptor& descriptor() const noexcept { return desc_; }
    void set_descriptor(MatrixDescriptor d) noexcept { desc_ = d; }

    const std::vector<Index>& offsets() const noexcept { return offsets_; }
    const std::vector<Index>& minor_indices() const noexcept { return minor_; }
    const std::vector<T>& values() const noexcept { return values_; }

    /// Stored value at (i, j), if any.
    std::optional<T> at(Index i, Index j) const {
        if (i >= nrows_ || j >= ncols_) return std::nullopt;
        Index major = orientation_ == Orientation::row ? i : j;
        Index minor = orientation_ == Orientation::row ? j : i;
        auto first = minor_.begin() + static_cast<std::ptrdiff_t>(offsets_[major]);
        auto last = minor_.begin() + static_cast<std::ptrdiff_t>(offsets_[major + 1]);
        auto it = std::lower_bound(first, last, minor);
        if (it == last || *it != minor) return std::nullopt;
        return values_[static_cast<std::size_t>(it - minor_.begin())];
    }

    /// Description of the first storage invariant violated, or nullopt when valid.
    std::optional<std::string> check() const {
        const Index major = major_dim();
        if (offsets_.size() != major + 1) return "offsets has wrong length";
        if (offsets_.front() != 0) return "offsets[0] != 0";
        if (offsets_.back() != minor_.size()) return "offsets[last] != nnz";
        if (values_.size() != minor_.size()) return "values and indices differ in length";
        const Index bound = minor_dim();
        for (Index m = 0; m < major; ++m) {
            if (offsets_[m] > offsets_[m + 1]) return "offsets decrease at " + std::to_string(m);
            for (Index k = offsets_[m]; k < offsets_[m + 1]; ++k) {
                if (minor_[k] >= bound) return "minor index out of range in slice " + std::to_string(m);
                if (k > offsets_[m] && minor_[k - 1] >= minor_[k])
                    return "minor indices not strictly increasing in slice " + std::to_string(m);
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const CompressedMatrix&, const CompressedMatrix&) = default;

private:
    static Index major_of(Index nrows, Index ncols, Orientation o) noexcept {
        return o == Orientation::row ? nrows : ncols;
    }

    Index nrows_ = 0;
    Index ncols_ = 0;
    Orientation orientation_ = Orientation::row;
    std::vector<Index> offsets_;
    std::vector<Index> minor_;
    std::vector<T> values_;
    MatrixDescriptor desc_;
};

template <Scalar T>
class SparseVector {
public:
    using value_type = T;

    SparseVector() = default;
    explicit SparseVector(Index size) : size_(size) {}

    /// Adopts sorted, duplicate-free entries; throws invalid_argument otherwise.
    SparseVector(Index size, std::vector<Index> indices, std::vector<T> values)
        : size_(size), indices_(std::move(indices)), values_(std::move(values)) {
        if (auto problem = check()) throw Error(ErrorCode::invalid_argument, *problem);
    }

    Index size() const noexcept { return size_; }
    Index nvals() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    const std::vector<Index>& indices() const noexcept { return indices_; }
    const std::vector<T>& values() const noexcept { return values_; }

    std::optional<T> at(Index i) const {
        auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
        if (it == indices_.end() || *it != i) return std::nullopt;
        return values_[static_cast<std::size_t>(it - indices_.begin())];
    }

    std::optional<std::string> check() const {
        if (indices_.size() != values_.size()) return "indices and values differ in length";
        for (std::size_t k = 0; k < indices_.size(); ++k) {
            if (indices_[k] >= size_) return "index out of range at entry " + std::to_string(k);
            if (k > 0 && indices_[k - 1] >= indices_[k])
                return "indices not strictly increasing at entry " + std::to_string(k);
        }
        return std::nullopt;
    }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    Index size_ = 0;
    std::vector<Index> indices_;
    std::vector<T> values_;
};

// ---------------------------------------------------------------------------
// Construction and conversion

/// Sorts `triples` by (row, col) and folds duplicates left to right with `dup`.
template <Scalar T>
CooMatrix<T> build_from_triples(Index nrows, Index ncols, std::vector<Triple<T>> triples,
                                const Monoid<T>& dup, MatrixDescriptor desc = {}) {
    for (std::size_t k = 0; k < triples.size(); ++k) {
        if (triples[k].row >= nrows || triples[k].col >= ncols)
            throw Error(ErrorCode::index_out_of_range,
                        "triple " + std::to_string(k) + " (" + std::to_string(triples[k].row) + ", " +
                            std::to_string(triples[k].col) + ") is outside a " +
                            std::to_string(nrows) + "x" + std::to_string(ncols) + " matrix");
    }
    std::stable_sort(triples.begin(), triples.end(), [](const Triple<T>& a, const Triple<T>& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Triple<T>> out;
    out.reserve(triples.size());
    for (auto& t : triples) {
        if (!out.empty() && out.back().row == t.row && out.back().col == t.col) {
            out.back().val = dup(out.back().val, t.val);
        } else {
            out.push_back(std::move(t));
        }
    }
    return CooMatrix<T>(nrows, ncols, std::move(out), desc);
}

/// Sparse vector from unordered (index, value) pairs; duplicates folded with `dup`.
template <Scalar T>
SparseVector<T> build_vector(Index size, std::vector<std::pair<Index, T>> entries, const Monoid<T>& dup) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].first >= size)
            throw Error(ErrorCode::index_out_of_range,
                        "entry " + std::to_string(k) + " index " + std::to_string(entries[k].first) +
                            " is outside a vector of length " + std::to_string(size));
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Index> idx;
    std::vector<T> vals;
    idx.reserve(entries.size());
    vals.reserve(entries.size());
    for (auto& [i, v] : entries) {
        if (!idx.empty() && idx.back() == i) {
            vals.back() = dup(vals.back(), v);
        } else {
            idx.push_back(i);
            vals.push_back(std::move(v));
        }
    }
    return SparseVector<T>(size, std::move(idx), std::move(vals));
}

/// Vector holding `value` at every position.
template <Scalar T>
SparseVector<T> full_vector(Index size, const T& value) {
    std::vector<Index> idx(size);
    std::iota(idx.begin(), idx.end(), Index{0});
    return SparseVector<T>(size, std::move(idx), std::vector<T>(size, value));
}

/// Boolean vector that is stored (true) exactly where `v` has no entry.
template <Scalar T>
SparseVector<bool> pattern_complement(const SparseVector<T>& v) {
    std::vector<Index> idx;
    idx.reserve(v.size() - v.nvals());
    const auto& present = v.indices();
    std::size_t k = 0;
    for (Index i = 0; i < v.size(); ++i) {
        if (k < present.size() && present[k] == i) {
            ++k;
        } else {
            idx.push_back(i);
        }
    }
    std::vector<bool> vals(idx.size(), true);
    return SparseVector<bool>(v.size(), std::move(idx), std::move(vals));
}

namespace detail {

// Counting-sort style compression of (major, minor, value) records that are already
// sorted by minor within equal major once bucketed in input order.
template <Scalar T, class MajorOf, class MinorOf, class Source>
CompressedMatrix<T> compress(Index nrows, Index ncols, Orientation o, const Source& src, MajorOf major_of,
                             MinorOf minor_of, MatrixDescriptor desc) {
    const Index major = o == Orientation::row ? nrows : ncols;
    std::vector<Index> offsets(major + 1, 0);
    for (const auto& e : src) ++offsets[major_of(e) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<Index> minor(offsets.back());
    std::vector<T> values(offsets.back());
    std::vector<Index> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& e : src) {
        Index pos = cursor[major_of(e)]++;
        minor[pos] = minor_of(e);
        values[pos] = e.val;
    }
    return CompressedMatrix<T>(nrows, ncols, o, std::move(offsets), std::move(minor), std::move(values), desc);
}

}  // namespace detail

template <Scalar T>
CompressedMatrix<T> to_compressed(const CooMatrix<T>& m, Orientation o = Orientation::row) {
    // Triples are row-major sorted, so bucketing by column keeps rows increasing per column.
    if (o == Orientation::row) {
        return detail::compress<T>(m.nrows(), m.ncols(), o, m.triples(), [](const auto& t) { return t.row; },
                                   [](const auto& t) { return t.col; }, m.descriptor());
    }
    return detail::compress<T>(m.nrows(), m.ncols(), o, m.triples(), [](const auto& t) { return t.col; },
                               [](const auto& t) { return t.row; }, m.descriptor());
}

template <Scalar T>
CooMatrix<T> to_tuples(const CompressedMatrix<T>& m) {
    std::vector<Triple<T>> triples;
    triples.reserve(m.nvals());
    const auto& off = m.offsets();
    const auto& minor = m.minor_indices();
    const auto& vals = m.values();
    for (Index a = 0; a < m.major_dim(); ++a) {
        for (Index k = off[a]; k < off[a + 1]; ++k) {
            if (m.orientation() == Orientation::row) {
                triples.push_back({a, minor[k], vals[k]});
            } else {
                triples.push_back({minor[k], a, vals[k]});
            }
        }
    }
    if (m.orientation() == Orientation::col) {
        std::sort(triples.begin(), triples.end(), [](const Triple<T>& x, const Triple<T>& y) {
            return x.row != y.row ? x.row < y.row : x.col < y.col;
        });
    }
    return CooMatrix<T>(m.nrows(), m.ncols(), std::move(triples), m.descriptor());
}

/// Same matrix in the requested orientation (CSR <-> CSC).
template <Scalar T>
CompressedMatrix<T> reorient(const CompressedMatrix<T>& m, Orientation o) {
    if (m.orientation() == o) return m;
    struct Rec {
        Index major, minor;
        T val;
    };
    // Walking the old major order visits each new slice with increasing minor index.
    std::vector<Rec> recs;
    recs.reserve(m.nvals());
    const auto& off = m.offsets();
    for (Index a = 0; a < m.major_dim(); ++a) {
        for (Index k = off[a]; k < off[a + 1]; ++k) recs.push_back({m.minor_indices()[k], a, m.values()[k]});
    }
    return detail::compress<T>(m.nrows(), m.ncols(), o, recs, [](const Rec& r) { return r.major; },
                               [](const Rec& r) { return r.minor; }, m.descriptor());
}

/// Transpose, keeping the orientation of the input.
template <Scalar T>
CompressedMatrix<T> transpose(const CompressedMatrix<T>& m) {
    // The arrays of m read in the flipped orientation describe m^T.
    CompressedMatrix<T> flipped_view(m.ncols(), m.nrows(), flipped(m.orientation()), m.offsets(),
                                     m.minor_indices(), m.values(), m.descriptor());
    return reorient(flipped_view, m.orientation());
}

/// True iff the matrix equals its transpose in pattern and values. Requires a square matrix.
template <Scalar T>
bool is_symmetric(const CompressedMatrix<T>& m) {
    if (m.nrows() != m.ncols())
        throw Error(ErrorCode::non_square, "is_symmetric requires a square matrix, got " +
                                               std::to_string(m.nrows()) + "x" + std::to_string(m.ncols()));
    CompressedMatrix<T> t = transpose(m);
    return t.offsets() == m.offsets() && t.minor_indices() == m.minor_indices() && t.values() == m.values();
}

template <Scalar T>
Index nvals(const CompressedMatrix<T>& m) noexcept {
    return m.nvals();
}

template <Scalar T>
Index nvals(const SparseVector<T>& v) noexcept {
    return v.nvals();
}

template <Scalar T>
std::pair<Index, Index> dims(const CompressedMatrix<T>& m) noexcept {
    return {m.nrows(), m.ncols()};
}

/// Throws internal_invariant if the container violates its storage invariants.
template <Scalar T>
void validate(const CompressedMatrix<T>& m) {
    if (auto problem = m.check()) throw Error(ErrorCode::internal_invariant, *problem);
}

template <Scalar T>
void validate(const SparseVector<T>& v) {
    if (auto problem = v.check()) throw Error(ErrorCode::internal_invariant, *problem);
}

}  // namespace sgk
