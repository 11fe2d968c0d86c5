#include <doctest.h>

#include "sgk/ops.hpp"
#include "sgk/sparse.hpp"
#include "support/test_support.hpp"

using namespace sgk;
using namespace sgk::testing;

namespace {

CooMatrix<std::int64_t> k3_coo() {
    return CooMatrix<std::int64_t>(3, 3, {{0, 1, 1}, {0, 2, 1}, {1, 0, 1}, {1, 2, 1}, {2, 0, 1}, {2, 1, 1}}, {true});
}

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

template <Scalar T>
void conversion_round_trips(Rng& rng) {
    for (int it = 0; it < 40; ++it) {
        const Index r = uniform_index(rng, 0, 25), c = uniform_index(rng, 0, 25);
        auto M = random_matrix<T>(rng, r, c, uniform_real(rng, 0, 0.4), T{}, Orientation::row);
        const auto coo = to_tuples(M);
        auto csr = to_compressed(coo, Orientation::row);
        auto csc = to_compressed(coo, Orientation::col);
        validate(csr);
        validate(csc);
        CHECK(structural_hash(to_tuples(csr)) == structural_hash(coo));
        CHECK(structural_hash(to_tuples(csc)) == structural_hash(coo));
        CHECK(reorient(csr, Orientation::col) == csc);
        CHECK(reorient(reorient(csr, Orientation::col), Orientation::row) == csr);
        auto tt = transpose(transpose(csc));
        validate(tt);
        CHECK(tt == csc);
    }
}

}  // namespace

TEST_CASE("build_from_triples folds duplicates in input order") {
    auto plus = ops::plus_monoid<std::int64_t>();
    auto m = build_from_triples<std::int64_t>(2, 2, {{0, 1, 1}, {0, 1, 1}}, plus);
    REQUIRE(m.nvals() == 1);
    CHECK(m.triples()[0].row == 0);
    CHECK(m.triples()[0].col == 1);
    CHECK(m.triples()[0].val == 2);

    auto empty = build_from_triples<std::int64_t>(4, 4, {}, plus);
    CHECK(empty.nvals() == 0);

    auto sorted = build_from_triples<std::int64_t>(2, 2, {{1, 0, 7}, {0, 1, 5}}, plus);
    REQUIRE(sorted.nvals() == 2);
    CHECK(sorted.triples()[0].val == 5);
    CHECK(sorted.triples()[1].val == 7);

    // A non-commutative fold shows the order: first() keeps the earliest value.
    Monoid<std::int64_t> keep{ops::first<std::int64_t>(), 0};
    auto first = build_from_triples<std::int64_t>(3, 3, {{2, 2, 9}, {1, 1, 4}, {2, 2, 3}}, keep);
    CHECK(first.triples()[1].val == 9);
}

TEST_CASE("build_from_triples rejects out-of-range indices") {
    auto plus = ops::plus_monoid<std::int64_t>();
    CHECK(code_of([&] { build_from_triples<std::int64_t>(2, 2, {{0, 0, 1}, {2, 0, 1}}, plus); }) ==
          ErrorCode::index_out_of_range);
    CHECK(code_of([&] { build_from_triples<std::int64_t>(2, 2, {{0, 5, 1}}, plus); }) ==
          ErrorCode::index_out_of_range);
}

TEST_CASE("container constructors enforce their invariants") {
    CHECK(code_of([] { CooMatrix<int>(2, 2, {{1, 0, 1}, {0, 1, 1}}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { CooMatrix<int>(2, 2, {{0, 1, 1}, {0, 1, 1}}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { CompressedMatrix<int>(2, 2, Orientation::row, {0, 1, 1}, {2}, {1}); }) ==
          ErrorCode::invalid_argument);
    CHECK(code_of([] { CompressedMatrix<int>(2, 2, Orientation::row, {0, 2, 2}, {1, 1}, {1, 1}); }) ==
          ErrorCode::invalid_argument);
    CHECK(code_of([] { CompressedMatrix<int>(2, 2, Orientation::row, {0, 2, 1}, {0, 1}, {1, 1}); }) ==
          ErrorCode::invalid_argument);
    CHECK(code_of([] { SparseVector<int>(3, {2, 1}, {1, 1}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { SparseVector<int>(3, {3}, {1}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("compressed layouts match the storage definition") {
    auto m = to_compressed(CooMatrix<std::int32_t>(2, 2, {{0, 1, 10}, {1, 0, 20}}));
    CHECK(m.offsets() == std::vector<Index>{0, 1, 2});
    CHECK(m.minor_indices() == std::vector<Index>{1, 0});
    CHECK(m.values() == std::vector<std::int32_t>{10, 20});

    auto empty = to_compressed(CooMatrix<double>(3, 3, {}));
    CHECK(empty.offsets() == std::vector<Index>{0, 0, 0, 0});
    auto empty_csc = to_compressed(CooMatrix<double>(3, 5, {}), Orientation::col);
    CHECK(empty_csc.offsets().size() == 6);

    auto csc = to_compressed(CooMatrix<std::int32_t>(2, 3, {{0, 2, 1}, {1, 0, 2}, {1, 2, 3}}), Orientation::col);
    CHECK(csc.offsets() == std::vector<Index>{0, 1, 1, 3});
    CHECK(csc.minor_indices() == std::vector<Index>{1, 0, 1});
    CHECK(csc.at(1, 2) == 3);
    CHECK_FALSE(csc.at(0, 0).has_value());
}

TEST_CASE("transpose, symmetry and sizes") {
    auto edge = to_compressed(CooMatrix<std::int64_t>(2, 2, {{0, 1, 1}}));
    auto t = transpose(edge);
    CHECK(t.at(1, 0) == 1);
    CHECK(t.nvals() == 1);
    CHECK_FALSE(is_symmetric(edge));

    auto k3 = to_compressed(k3_coo());
    CHECK(is_symmetric(k3));
    CHECK(transpose(k3) == k3);
    CHECK(nvals(k3) == 6);
    CHECK(is_symmetric(CompressedMatrix<double>(4, 4)));
    CHECK(nvals(CompressedMatrix<double>(4, 4)) == 0);
    CHECK(dims(CompressedMatrix<double>(3, 5)) == std::pair<Index, Index>{3, 5});
    CHECK(code_of([] { is_symmetric(CompressedMatrix<double>(3, 5)); }) == ErrorCode::non_square);

    auto weighted = to_compressed(CooMatrix<double>(2, 2, {{0, 1, 1.0}, {1, 0, 2.0}}), Orientation::col);
    CHECK_FALSE(is_symmetric(weighted));
}

TEST_CASE("conversions are exact identities on random matrices") {
    Rng rng(11);
    conversion_round_trips<bool>(rng);
    conversion_round_trips<std::int8_t>(rng);
    conversion_round_trips<std::uint64_t>(rng);
    conversion_round_trips<float>(rng);
    conversion_round_trips<double>(rng);
    conversion_round_trips<std::complex<double>>(rng);
    conversion_round_trips<OpaqueHandle>(rng);
}

TEST_CASE("random symmetric matrices are symmetric in both orientations") {
    Rng rng(12);
    for (int it = 0; it < 50; ++it) {
        auto S = random_symmetric<double>(rng, uniform_index(rng, 1, 30), 0.3, 0.0, true);
        CHECK(is_symmetric(S));
        CHECK(is_symmetric(reorient(S, flipped(S.orientation()))));
        CHECK(transpose(S) == S);
    }
}

TEST_CASE("vector construction helpers") {
    auto v = build_vector<std::int64_t>(5, {{3, 1}, {1, 2}, {3, 4}}, ops::plus_monoid<std::int64_t>());
    CHECK(v.indices() == std::vector<Index>{1, 3});
    CHECK(v.values() == std::vector<std::int64_t>{2, 5});
    CHECK(code_of([] { build_vector<int>(2, {{2, 1}}, ops::plus_monoid<int>()); }) == ErrorCode::index_out_of_range);

    auto full = full_vector<double>(3, 1.5);
    CHECK(full.nvals() == 3);
    CHECK(full.at(2) == 1.5);

    auto comp = pattern_complement(v);
    CHECK(comp.indices() == std::vector<Index>{0, 2, 4});
    CHECK(pattern_complement(full).empty());
    CHECK(pattern_complement(SparseVector<int>(3)).nvals() == 3);
}

TEST_CASE("explicit monoid identities may be stored at build time") {
    auto m = build_from_triples<double>(2, 2, {{0, 0, 0.0}}, ops::plus_monoid<double>());
    CHECK(m.nvals() == 1);
    auto c = to_compressed(m);
    CHECK(c.at(0, 0) == 0.0);
}
