#include <doctest.h>

#include <sstream>

#include "sgk/io.hpp"
#include "support/test_support.hpp"

using namespace sgk;
using namespace sgk::testing;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an sgk::Error");
    return ErrorCode::internal_invariant;
}

MatrixMarketFile read_text(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_market(in);
}

std::string error_message(const std::string& text) {
    try {
        read_text(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

template <Scalar T>
void write_read_identity(Rng& rng) {
    for (int it = 0; it < 30; ++it) {
        auto M = random_matrix<T>(rng, uniform_index(rng, 0, 20), uniform_index(rng, 0, 20), 0.3, T{});
        const auto coo = to_tuples(M);
        std::stringstream file;
        write_matrix_market(coo, file);
        auto back = read_matrix_market_as<T>(file);
        CHECK(back == coo);
    }
}

}  // namespace

TEST_CASE("symmetric files are expanded") {
    auto f = read_text(
        "%%MatrixMarket matrix coordinate pattern symmetric\n"
        "% triangle\n"
        "3 3 3\n"
        "2 1\n3 1\n3 2\n");
    CHECK(f.header.symmetry == MmSymmetry::symmetric);
    const auto& m = std::get<CooMatrix<std::int64_t>>(f.matrix);
    CHECK(m.nvals() == 6);
    CHECK(m.descriptor().symmetric);
    CHECK(is_symmetric(to_compressed(m)));
}

TEST_CASE("symmetric diagonal entries are stored once") {
    auto f = read_text("%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 4.5\n2 1 -1\n");
    const auto& m = std::get<CooMatrix<double>>(f.matrix);
    CHECK(m.nvals() == 3);
    CHECK(to_compressed(m).at(0, 0) == 4.5);
}

TEST_CASE("pattern entries become int64 ones at 0-based positions") {
    auto f = read_text("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n");
    const auto& m = std::get<CooMatrix<std::int64_t>>(f.matrix);
    REQUIRE(m.nvals() == 1);
    CHECK(m.triples()[0] == Triple<std::int64_t>{0, 1, 1});
}

TEST_CASE("field determines the domain") {
    CHECK(std::holds_alternative<CooMatrix<double>>(
        read_text("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 2.5\n").matrix));
    CHECK(std::holds_alternative<CooMatrix<std::int64_t>>(
        read_text("%%MatrixMarket matrix coordinate integer general\n1 1 1\n1 1 -7\n").matrix));
    auto c = read_text("%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1.5 -2\n");
    const auto& cm = std::get<CooMatrix<std::complex<double>>>(c.matrix);
    CHECK(cm.triples()[0].val == std::complex<double>(1.5, -2));
}

TEST_CASE("duplicates are summed") {
    auto f = read_text("%%MatrixMarket matrix coordinate integer general\n2 2 3\n1 2 3\n2 2 1\n1 2 4\n");
    const auto& m = std::get<CooMatrix<std::int64_t>>(f.matrix);
    CHECK(m.nvals() == 2);
    CHECK(to_compressed(m).at(0, 1) == 7);
}

TEST_CASE("malformed files are rejected with line numbers") {
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real general\n2 2 1\n0 1 5.0\n"); }) ==
          ErrorCode::index_out_of_range);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 5.0\n"); }) ==
          ErrorCode::index_out_of_range);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix array real general\n2 2\n"); }) ==
          ErrorCode::unsupported_header);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real hermitian\n1 1 0\n"); }) ==
          ErrorCode::unsupported_header);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real skew-symmetric\n1 1 0\n"); }) ==
          ErrorCode::unsupported_header);
    CHECK(code_of([] { read_text("%%MatrixMarket vector coordinate real general\n1 1 0\n"); }) ==
          ErrorCode::unsupported_header);
    CHECK(code_of([] { read_text("2 2 0\n"); }) == ErrorCode::unsupported_header);
    CHECK(code_of([] { read_text(""); }) == ErrorCode::unsupported_header);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 abc\n"); }) ==
          ErrorCode::parse_error);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n"); }) ==
          ErrorCode::parse_error);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1\n"); }) ==
          ErrorCode::parse_error);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate integer general\n2 2 1\n1 1 2.5\n"); }) ==
          ErrorCode::parse_error);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real general\n"); }) == ErrorCode::parse_error);
    CHECK(code_of([] { read_text("%%MatrixMarket matrix coordinate real symmetric\n2 3 0\n"); }) ==
          ErrorCode::parse_error);
    CHECK(error_message("%%MatrixMarket matrix coordinate real general\n% c\n2 2 1\nx 1 1\n").find("line 4") !=
          std::string::npos);
}

TEST_CASE("narrow domains check their range on read") {
    std::istringstream big("%%MatrixMarket matrix coordinate integer general\n1 1 1\n1 1 300\n");
    CHECK(code_of([&] { read_matrix_market_as<std::int8_t>(big); }) == ErrorCode::parse_error);
    std::istringstream two("%%MatrixMarket matrix coordinate integer general\n1 1 1\n1 1 2\n");
    CHECK(code_of([&] { read_matrix_market_as<bool>(two); }) == ErrorCode::parse_error);
}

TEST_CASE("writing") {
    std::ostringstream empty;
    write_matrix_market(CooMatrix<double>(3, 4), empty);
    CHECK(empty.str() == "%%MatrixMarket matrix coordinate real general\n3 4 0\n");

    std::ostringstream b;
    write_matrix_market(CooMatrix<bool>(2, 2, {{1, 0, true}}), b);
    CHECK(b.str() == "%%MatrixMarket matrix coordinate integer general\n2 2 1\n2 1 1\n");

    std::ostringstream f;
    write_matrix_market(CooMatrix<double>(1, 1, {{0, 0, 0.1}}), f);
    CHECK(f.str() == "%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 0.1\n");

    std::ostringstream o;
    CHECK(code_of([&] { write_matrix_market(CooMatrix<OpaqueHandle>(1, 1, {{0, 0, {7}}}), o); }) ==
          ErrorCode::unserializable_domain);
}

TEST_CASE("write then read is the identity") {
    Rng rng(41);
    write_read_identity<bool>(rng);
    write_read_identity<std::int8_t>(rng);
    write_read_identity<std::int16_t>(rng);
    write_read_identity<std::int32_t>(rng);
    write_read_identity<std::int64_t>(rng);
    write_read_identity<std::uint8_t>(rng);
    write_read_identity<std::uint16_t>(rng);
    write_read_identity<std::uint32_t>(rng);
    write_read_identity<std::uint64_t>(rng);
    write_read_identity<float>(rng);
    write_read_identity<double>(rng);
    write_read_identity<std::complex<double>>(rng);
}

TEST_CASE("extreme values survive a round trip") {
    using L64 = std::numeric_limits<std::int64_t>;
    using LU = std::numeric_limits<std::uint64_t>;
    using LD = std::numeric_limits<double>;
    for (auto v : {L64::max(), L64::lowest(), std::int64_t{0}}) {
        std::stringstream s;
        write_matrix_market(CooMatrix<std::int64_t>(1, 1, {{0, 0, v}}), s);
        CHECK(read_matrix_market_as<std::int64_t>(s).triples()[0].val == v);
    }
    std::stringstream u;
    write_matrix_market(CooMatrix<std::uint64_t>(1, 1, {{0, 0, LU::max()}}), u);
    CHECK(read_matrix_market_as<std::uint64_t>(u).triples()[0].val == LU::max());
    for (double v : {LD::min(), LD::max(), LD::denorm_min(), -1.0 / 3.0, 1e-300}) {
        std::stringstream s;
        write_matrix_market(CooMatrix<double>(1, 1, {{0, 0, v}}), s);
        CHECK(read_matrix_market_as<double>(s).triples()[0].val == v);
    }
}

TEST_CASE("edge lists") {
    std::istringstream path("0\t1\n1\t2\n");
    auto p = std::get<CooMatrix<std::int64_t>>(read_edge_list(path));
    CHECK(p.nrows() == 3);
    CHECK(p.nvals() == 2);

    std::istringstream und("# comment\n0\t1\n\n1\t2\n");
    auto u = std::get<CooMatrix<std::int64_t>>(read_edge_list(und, {false, true}));
    CHECK(u.nvals() == 4);
    CHECK(u.descriptor().symmetric);
    CHECK(is_symmetric(to_compressed(u)));

    std::istringstream w("0\t1\t2.5\n");
    auto wm = std::get<CooMatrix<double>>(read_edge_list(w, {true, false}));
    CHECK(wm.triples()[0] == Triple<double>{0, 1, 2.5});

    std::istringstream dup("0\t1\n0\t1\n");
    CHECK(std::get<CooMatrix<std::int64_t>>(read_edge_list(dup)).triples()[0].val == 2);

    std::istringstream loop("2\t2\n");
    auto l = std::get<CooMatrix<std::int64_t>>(read_edge_list(loop, {false, true}));
    CHECK(l.nvals() == 1);
    CHECK(l.nrows() == 3);
}

TEST_CASE("edge list errors") {
    std::istringstream neg("0\t-1\n");
    CHECK(code_of([&] { read_edge_list(neg); }) == ErrorCode::negative_index);
    std::istringstream bad("0\tx\n");
    CHECK(code_of([&] { read_edge_list(bad); }) == ErrorCode::parse_error);
    std::istringstream missing("0\t1\n");
    CHECK(code_of([&] { read_edge_list(missing, {true, false}); }) == ErrorCode::parse_error);
    std::istringstream extra("0\t1\t3\n");
    CHECK(code_of([&] { read_edge_list(extra); }) == ErrorCode::parse_error);
}
