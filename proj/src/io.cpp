#include "sgk/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sgk {

std::string_view to_string(MmField f) noexcept {
    switch (f) {
        case MmField::real: return "real";
        case MmField::integer: return "integer";
        case MmField::complex: return "complex";
        case MmField::pattern: return "pattern";
    }
    return "?";
}

std::string_view to_string(MmSymmetry s) noexcept {
    return s == MmSymmetry::general ? "general" : "symmetric";
}

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

Index parse_index(std::string_view token, std::size_t line, const char* what) {
    if (!token.empty() && token.front() == '-') {
        throw Error(ErrorCode::negative_index,
                    "line " + std::to_string(line) + ": negative " + what + " '" + std::string(token) + "'");
    }
    Index v = 0;
    auto r = std::from_chars(token.data(), token.data() + token.size(), v);
    if (r.ec != std::errc{} || r.ptr != token.data() + token.size())
        io_detail::parse_failure(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    return v;
}

MatrixMarketHeader parse_banner(const std::string& line) {
    auto tokens = split_ws(line);
    if (tokens.empty() || lowercase(std::string(tokens[0])) != "%%matrixmarket")
        throw Error(ErrorCode::unsupported_header, "missing %%MatrixMarket banner");
    if (tokens.size() != 5)
        throw Error(ErrorCode::unsupported_header,
                    "banner must read '%%MatrixMarket matrix coordinate <field> <symmetry>'");
    const std::string object = lowercase(std::string(tokens[1]));
    const std::string format = lowercase(std::string(tokens[2]));
    const std::string field = lowercase(std::string(tokens[3]));
    const std::string symmetry = lowercase(std::string(tokens[4]));
    if (object != "matrix") throw Error(ErrorCode::unsupported_header, "unsupported object '" + object + "'");
    if (format != "coordinate")
        throw Error(ErrorCode::unsupported_header, "unsupported format '" + format + "' (only coordinate)");
    MatrixMarketHeader h;
    if (field == "real") h.field = MmField::real;
    else if (field == "integer") h.field = MmField::integer;
    else if (field == "complex") h.field = MmField::complex;
    else if (field == "pattern") h.field = MmField::pattern;
    else throw Error(ErrorCode::unsupported_header, "unsupported field '" + field + "'");
    if (symmetry == "general") h.symmetry = MmSymmetry::general;
    else if (symmetry == "symmetric") h.symmetry = MmSymmetry::symmetric;
    else throw Error(ErrorCode::unsupported_header, "unsupported symmetry '" + symmetry + "'");
    return h;
}

std::size_t value_tokens(MmField f) {
    switch (f) {
        case MmField::pattern: return 0;
        case MmField::complex: return 2;
        default: return 1;
    }
}

}  // namespace

namespace io_detail {

void parse_failure(std::size_t line, const std::string& reason) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + reason);
}

RawMatrixMarket scan_matrix_market(std::istream& in) {
    RawMatrixMarket raw;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw Error(ErrorCode::unsupported_header, "empty input: missing banner");
    ++line_no;
    raw.header = parse_banner(line);

    // Size line, skipping comments and blank lines.
    bool have_size = false;
    Index expected = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line.front() == '%') continue;
        auto tokens = split_ws(line);
        if (tokens.size() != 3) parse_failure(line_no, "size line must hold 'rows cols entries'");
        raw.nrows = parse_index(tokens[0], line_no, "row count");
        raw.ncols = parse_index(tokens[1], line_no, "column count");
        expected = parse_index(tokens[2], line_no, "entry count");
        have_size = true;
        break;
    }
    if (!have_size) parse_failure(line_no, "missing size line");
    if (raw.header.symmetry == MmSymmetry::symmetric && raw.nrows != raw.ncols)
        parse_failure(line_no, "symmetric matrix must be square");

    const std::size_t nvalue = value_tokens(raw.header.field);
    raw.entries.reserve(expected);
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line) || line.front() == '%') continue;
        auto tokens = split_ws(line);
        if (tokens.size() != 2 + nvalue)
            parse_failure(line_no, "expected " + std::to_string(2 + nvalue) + " fields, got " +
                                       std::to_string(tokens.size()));
        if (raw.entries.size() == expected) parse_failure(line_no, "more entries than declared");
        RawEntry e;
        e.line = line_no;
        Index r = parse_index(tokens[0], line_no, "row index");
        Index c = parse_index(tokens[1], line_no, "column index");
        if (r < 1 || r > raw.nrows || c < 1 || c > raw.ncols)
            throw Error(ErrorCode::index_out_of_range,
                        "line " + std::to_string(line_no) + ": entry (" + std::string(tokens[0]) + ", " +
                            std::string(tokens[1]) + ") is outside the 1-based " + std::to_string(raw.nrows) +
                            "x" + std::to_string(raw.ncols) + " matrix");
        e.row = r - 1;
        e.col = c - 1;
        for (std::size_t k = 0; k < nvalue; ++k) e.tokens[k] = std::string(tokens[2 + k]);
        raw.entries.push_back(std::move(e));
    }
    if (raw.entries.size() != expected)
        parse_failure(line_no, "declared " + std::to_string(expected) + " entries, found " +
                                   std::to_string(raw.entries.size()));
    return raw;
}

}  // namespace io_detail

MatrixMarketFile read_matrix_market(std::istream& in) {
    auto raw = io_detail::scan_matrix_market(in);
    MatrixMarketFile out{raw.header, CooMatrix<std::int64_t>()};
    switch (raw.header.field) {
        case MmField::real: out.matrix = io_detail::assemble<double>(raw); break;
        case MmField::complex: out.matrix = io_detail::assemble<std::complex<double>>(raw); break;
        case MmField::integer:
        case MmField::pattern: out.matrix = io_detail::assemble<std::int64_t>(raw); break;
    }
    return out;
}

AnyCooMatrix read_edge_list(std::istream& in, EdgeListOptions options) {
    struct Edge {
        Index u, v;
        double w;
    };
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    Index dim = 0;
    const std::size_t want = options.weighted ? 3 : 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        auto first = line.find_first_not_of(" \t\r");
        if (line[first] == '#') continue;
        auto tokens = split_ws(line);
        if (tokens.size() != want)
            io_detail::parse_failure(line_no, "expected " + std::to_string(want) + " fields, got " +
                                                  std::to_string(tokens.size()));
        Edge e{parse_index(tokens[0], line_no, "vertex id"), parse_index(tokens[1], line_no, "vertex id"), 1.0};
        if (options.weighted) e.w = io_detail::parse_scalar<double>(tokens[2], line_no);
        dim = std::max({dim, e.u + 1, e.v + 1});
        edges.push_back(e);
    }
    MatrixDescriptor desc{options.undirected};
    auto build = [&]<class T>(T /*tag*/) {
        std::vector<Triple<T>> triples;
        triples.reserve(edges.size() * (options.undirected ? 2 : 1));
        for (const auto& e : edges) {
            T w = options.weighted ? static_cast<T>(e.w) : T(1);
            triples.push_back({e.u, e.v, w});
            if (options.undirected && e.u != e.v) triples.push_back({e.v, e.u, w});
        }
        return build_from_triples(dim, dim, std::move(triples), ops::plus_monoid<T>(), desc);
    };
    if (options.weighted) return build(double{});
    return build(std::int64_t{});
}

}  // namespace sgk
