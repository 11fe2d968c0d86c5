#pragma once

#include <charconv>
#include <complex>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "sgk/domain.hpp"
#include "sgk/error.hpp"
#include "sgk/ops.hpp"
#include "sgk/sparse.hpp"

namespace sgk {

enum class MmField { real, integer, complex, pattern };
enum class MmSymmetry { general, symmetric };

std::string_view to_string(MmField f) noexcept;
std::string_view to_string(MmSymmetry s) noexcept;

/// Parsed `%%MatrixMarket matrix coordinate <field> <symmetry>` banner.
struct MatrixMarketHeader {
    MmField field = MmField::real;
    MmSymmetry symmetry = MmSymmetry::general;
};

/// Domains a Matrix Market file maps to: integer and pattern -> int64, real -> double,
/// complex -> complex<double>.
using AnyCooMatrix = std::variant<CooMatrix<std::int64_t>, CooMatrix<double>, CooMatrix<std::complex<double>>>;

struct MatrixMarketFile {
    MatrixMarketHeader header;
    AnyCooMatrix matrix;
};

namespace io_detail {

/// Tokenized coordinate entry with indices already converted to 0-based.
struct RawEntry {
    Index row = 0;
    Index col = 0;
    std::string tokens[2];
    std::size_t line = 0;
};

struct RawMatrixMarket {
    MatrixMarketHeader header;
    Index nrows = 0;
    Index ncols = 0;
    std::vector<RawEntry> entries;
};

RawMatrixMarket scan_matrix_market(std::istream& in);

[[noreturn]] void parse_failure(std::size_t line, const std::string& reason);

template <Scalar T>
T parse_scalar(std::string_view token, std::size_t line) {
    T value{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    std::from_chars_result r{};
    if constexpr (std::is_same_v<T, bool>) {
        int v = 0;
        r = std::from_chars(first, last, v);
        if (r.ec == std::errc{} && r.ptr == last && (v == 0 || v == 1)) return v == 1;
        parse_failure(line, "expected boolean 0/1, got '" + std::string(token) + "'");
    } else {
        r = std::from_chars(first, last, value);
        if (r.ec == std::errc::result_out_of_range)
            parse_failure(line, "value '" + std::string(token) + "' does not fit the domain");
        if (r.ec != std::errc{} || r.ptr != last)
            parse_failure(line, "malformed value '" + std::string(token) + "'");
        return value;
    }
}

template <Scalar T>
T entry_value(MmField field, const RawEntry& e) {
    if (field == MmField::pattern) {
        if constexpr (is_complex_v<T>) return T(1.0, 0.0);
        else return T(1);
    }
    if constexpr (is_complex_v<T>) {
        double re = parse_scalar<double>(e.tokens[0], e.line);
        double im = field == MmField::complex ? parse_scalar<double>(e.tokens[1], e.line) : 0.0;
        return T(re, im);
    } else {
        if (field == MmField::complex) parse_failure(e.line, "complex value in a real-valued domain");
        if (field == MmField::real && std::is_integral_v<T>)
            parse_failure(e.line, "real value in an integer domain");
        return parse_scalar<T>(e.tokens[0], e.line);
    }
}

template <Scalar T>
CooMatrix<T> assemble(const RawMatrixMarket& raw) {
    std::vector<Triple<T>> triples;
    triples.reserve(raw.entries.size() * (raw.header.symmetry == MmSymmetry::symmetric ? 2 : 1));
    for (const auto& e : raw.entries) {
        T v = entry_value<T>(raw.header.field, e);
        if (raw.header.symmetry == MmSymmetry::symmetric && e.row != e.col) triples.push_back({e.col, e.row, v});
        triples.push_back({e.row, e.col, std::move(v)});
    }
    return build_from_triples(raw.nrows, raw.ncols, std::move(triples), ops::sum_monoid<T>(),
                              MatrixDescriptor{raw.header.symmetry == MmSymmetry::symmetric});
}

template <Scalar T>
void write_value(std::ostream& out, const T& v) {
    char buf[64];
    if constexpr (std::is_same_v<T, bool>) {
        out << (v ? '1' : '0');
    } else if constexpr (is_complex_v<T>) {
        write_value(out, v.real());
        out << ' ';
        write_value(out, v.imag());
    } else {
        // Shortest representation that parses back to the same value.
        auto r = std::to_chars(buf, buf + sizeof(buf), v);
        out.write(buf, r.ptr - buf);
    }
}

template <Scalar T>
constexpr MmField field_for() {
    if constexpr (is_complex_v<T>) return MmField::complex;
    else if constexpr (std::is_floating_point_v<T>) return MmField::real;
    else return MmField::integer;
}

}  // namespace io_detail

/**
 * Reads a Matrix Market coordinate file. Symmetric files are expanded to both triangles
 * (diagonal once) and flagged symmetric; duplicate coordinates are summed.
 */
MatrixMarketFile read_matrix_market(std::istream& in);

/// Reads a Matrix Market file directly into domain T (e.g. int8, float, or boolean 0/1).
template <NumericScalar T>
CooMatrix<T> read_matrix_market_as(std::istream& in) {
    return io_detail::assemble<T>(io_detail::scan_matrix_market(in));
}

/// Writes `m` as a general coordinate file. Floating values use shortest round-trip form;
/// booleans are written as integer 0/1. Opaque handles cannot be serialized.
template <Scalar T>
void write_matrix_market(const CooMatrix<T>& m, std::ostream& out) {
    if constexpr (std::is_same_v<T, OpaqueHandle>) {
        throw Error(ErrorCode::unserializable_domain, "opaque-handle values cannot be written to Matrix Market");
    } else {
        out << "%%MatrixMarket matrix coordinate " << to_string(io_detail::field_for<T>()) << " general\n";
        out << m.nrows() << ' ' << m.ncols() << ' ' << m.nvals() << '\n';
        for (const auto& t : m.triples()) {
            out << (t.row + 1) << ' ' << (t.col + 1) << ' ';
            io_detail::write_value(out, t.val);
            out << '\n';
        }
        if (!out) throw Error(ErrorCode::parse_error, "failed to write Matrix Market output");
    }
}

struct EdgeListOptions {
    bool weighted = false;
    bool undirected = false;
};

/**
 * Reads `u<TAB>v[<TAB>w]` lines with 0-based vertex ids; '#' starts a comment line. The
 * matrix is square with dimension 1 + largest id. Unweighted lists give int64 ones,
 * weighted ones give doubles. Undirected lists store each edge in both directions and are
 * flagged symmetric. Duplicates are summed.
 */
AnyCooMatrix read_edge_list(std::istream& in, EdgeListOptions options = {});

}  // namespace sgk
