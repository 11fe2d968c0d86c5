#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "sgk/laws.hpp"
#include "sgk/semiring_registry.hpp"

using namespace sgk;

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

template <Scalar T>
void all_builtins_lawful() {
    for (auto name : builtin_semiring_names) {
        auto s = builtin_semiring<T>(name);
        if (!s) continue;
        CAPTURE(name);
        CAPTURE(to_string(domain_of<T>));
        auto violation = check_semiring_laws(*s);
        CHECK_FALSE(violation.has_value());
    }
}

}  // namespace

TEST_CASE("registry semirings have the documented operations") {
    auto pt = registry_get<double>("plus_times");
    CHECK(pt.mul(2.0, 3.0) == 6.0);
    CHECK(pt.zero() == 0.0);

    auto oa = registry_get<bool>("or_and");
    CHECK(oa.add(true, false) == true);
    CHECK(oa.mul(true, false) == false);
    CHECK(oa.zero() == false);

    auto mm = registry_get<std::int64_t>("min_max");
    CHECK(mm.add(3, 5) == 3);
    CHECK(mm.mul(3, 5) == 5);
    CHECK(mm.zero() == std::numeric_limits<std::int64_t>::max());

    auto xp = registry_get<double>("max_plus");
    CHECK(xp.add(2.0, -1.0) == 2.0);
    CHECK(xp.mul(2.0, -1.0) == 1.0);
    CHECK(xp.zero() == -std::numeric_limits<double>::infinity());

    auto mp = registry_get<std::int32_t>("min_plus");
    CHECK(mp.add(4, 9) == 4);
    CHECK(mp.mul(4, 9) == 13);
    CHECK(mp.zero() == std::numeric_limits<std::int32_t>::max());

    auto ms = registry_get<std::int64_t>("min_select2nd");
    CHECK(ms.add(4, 9) == 4);
    CHECK(ms.mul(4, 9) == 9);
}

TEST_CASE("tropical products saturate at the encoded infinity") {
    using L = std::numeric_limits<std::int16_t>;
    auto mp = registry_get<std::int16_t>("min_plus");
    CHECK(mp.mul(L::max(), 5) == L::max());
    CHECK(mp.mul(-3, L::max()) == L::max());
    CHECK(mp.mul(L::max() - 2, 10) == L::max());
    auto xp = registry_get<std::int16_t>("max_plus");
    CHECK(xp.mul(L::lowest(), 100) == L::lowest());
    CHECK(xp.mul(L::lowest() + 1, -5) == L::lowest());
    auto xu = registry_get<std::uint8_t>("max_plus");
    CHECK(xu.zero() == 0);
    CHECK(xu.mul(0, 7) == 0);
    CHECK(xu.mul(250, 10) == 255);
}

TEST_CASE("integer plus_times wraps like two's complement") {
    auto s = registry_get<std::int8_t>("plus_times");
    CHECK(s.add.op(127, 1) == -128);
    CHECK(s.mul(16, 16) == 0);
    auto u = registry_get<std::uint16_t>("plus_times");
    CHECK(u.add.op(65535, 2) == 1);
}

TEST_CASE("min_select2nd annihilates on both sides") {
    auto s = registry_get<double>("min_select2nd");
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(s.mul(inf, 3.0) == inf);
    CHECK(s.mul(3.0, inf) == inf);
}

TEST_CASE("registry errors") {
    CHECK(code_of([] { registry_get("no_such_semiring", Domain::float64); }) == ErrorCode::unknown_name);
    CHECK(code_of([] { registry_get("max_plus", Domain::boolean); }) == ErrorCode::domain_not_supported);
    CHECK(code_of([] { registry_get("plus_times", Domain::opaque); }) == ErrorCode::domain_not_supported);
    CHECK(code_of([] { registry_get("or_and", Domain::int32); }) == ErrorCode::domain_not_supported);
    CHECK(code_of([] { register_semiring(*builtin_semiring<double>("plus_times")); }) ==
          ErrorCode::duplicate_name);
}

TEST_CASE("every built-in is defined over the documented domains") {
    auto& r = SemiringRegistry::global();
    for (Domain d : all_domains) {
        const bool numeric = d != Domain::boolean && d != Domain::opaque;
        const bool ordered = d != Domain::complex64 && d != Domain::opaque;
        const bool weight = ordered && d != Domain::boolean;
        CAPTURE(to_string(d));
        CHECK(r.contains("plus_times", d) == numeric);
        CHECK(r.contains("max_plus", d) == weight);
        CHECK(r.contains("min_plus", d) == weight);
        CHECK(r.contains("min_select2nd", d) == weight);
        CHECK(r.contains("min_max", d) == ordered);
        CHECK(r.contains("or_and", d) == (d == Domain::boolean));
    }
}

TEST_CASE("registry_get is idempotent on returned names") {
    for (auto name : builtin_semiring_names) {
        for (Domain d : all_domains) {
            if (!SemiringRegistry::global().contains(name, d)) continue;
            auto first = registry_get(name, d);
            auto again = std::visit([&](const auto& s) { return registry_get(s.name, d); }, first);
            CHECK(first.index() == again.index());
            std::visit([&](const auto& s) { CHECK(s.name == std::string(name)); }, again);
        }
    }
}

TEST_CASE("custom min/select-second over int64 registers and is retrievable") {
    using T = std::int64_t;
    Semiring<T> s{"components_min_select", ops::min_monoid<T>(), ops::select_second<T>(encoded_max<T>())};
    // Exhaustive sample of small integers plus the encoded infinity.
    std::vector<T> small;
    for (T v = -16; v <= 16; ++v) small.push_back(v);
    small.push_back(encoded_max<T>());
    CHECK_FALSE(check_semiring_laws(s, small, 1000, small.size()).has_value());

    CHECK(register_semiring(s) == "components_min_select");
    auto back = registry_get<T>("components_min_select");
    CHECK(back.mul(3, 8) == 8);
    CHECK(back.zero() == encoded_max<T>());
    CHECK(code_of([&] { register_semiring(s); }) == ErrorCode::duplicate_name);
    CHECK(code_of([] { registry_get("components_min_select", Domain::float64); }) ==
          ErrorCode::domain_not_supported);
    auto names = SemiringRegistry::global().names();
    CHECK(std::find(names.begin(), names.end(), "components_min_select") != names.end());
}

TEST_CASE("an unguarded select-second fails the annihilator law") {
    using T = std::int64_t;
    Semiring<T> s{"raw_select", ops::min_monoid<T>(), ops::second<T>()};
    try {
        register_semiring(s);
        FAIL("registration should fail");
    } catch (const LawCheckError& e) {
        CHECK(e.law() == Law::annihilator);
        CHECK(e.code() == ErrorCode::law_check_failure);
    }
}

TEST_CASE("law check failures name the law and witnesses") {
    using T = std::int64_t;
    SUBCASE("subtraction is not commutative") {
        Semiring<T> s{"minus_times", {ops::minus<T>(), 0}, ops::times<T>()};
        try {
            register_semiring(s);
            FAIL("registration should fail");
        } catch (const LawCheckError& e) {
            CHECK(e.law() == Law::commutativity);
            CHECK_FALSE(e.witnesses().empty());
        }
    }
    SUBCASE("averaging is not associative") {
        Semiring<double> s{"mean_times",
                           {{"mean", [](const double& a, const double& b) { return (a + b) / 2; }}, 0.0},
                           ops::times<double>()};
        try {
            register_semiring(s);
            FAIL("registration should fail");
        } catch (const LawCheckError& e) {
            CHECK(e.law() == Law::associativity);
        }
    }
    SUBCASE("wrong identity") {
        Semiring<T> s{"max_zero", {ops::max<T>(), 0}, ops::min<T>()};
        try {
            register_semiring(s);
            FAIL("registration should fail");
        } catch (const LawCheckError& e) {
            CHECK(e.law() == Law::identity);
        }
    }
    SUBCASE("zero does not annihilate") {
        Semiring<T> s{"plus_plus", ops::plus_monoid<T>(), ops::plus<T>()};
        try {
            register_semiring(s);
            FAIL("registration should fail");
        } catch (const LawCheckError& e) {
            CHECK(e.law() == Law::annihilator);
        }
    }
    CHECK_FALSE(SemiringRegistry::global().contains("minus_times", Domain::int64));
}

TEST_CASE("built-in semirings satisfy the laws on every domain") {
    all_builtins_lawful<bool>();
    all_builtins_lawful<std::int8_t>();
    all_builtins_lawful<std::int16_t>();
    all_builtins_lawful<std::int32_t>();
    all_builtins_lawful<std::int64_t>();
    all_builtins_lawful<std::uint8_t>();
    all_builtins_lawful<std::uint16_t>();
    all_builtins_lawful<std::uint32_t>();
    all_builtins_lawful<std::uint64_t>();
    all_builtins_lawful<float>();
    all_builtins_lawful<double>();
    all_builtins_lawful<std::complex<double>>();
}

TEST_CASE("law_equal tolerates one ulp on floats only") {
    const double one = 1.0;
    const double next = std::nextafter(one, 2.0);
    CHECK(law_equal(one, next));
    CHECK_FALSE(law_equal(one, std::nextafter(next, 2.0)));
    CHECK(law_equal(0.0, -0.0));
    CHECK(law_equal(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()));
    CHECK_FALSE(law_equal<std::int64_t>(1, 2));
    CHECK(law_equal(std::complex<double>(1, next), std::complex<double>(1, 1)));
}

TEST_CASE("law samples contain the zero, extremes, and 1000 random values") {
    auto s = law_samples<std::int32_t>(0);
    CHECK(s.size() >= 1000);
    CHECK(std::find(s.begin(), s.end(), std::numeric_limits<std::int32_t>::max()) != s.end());
    CHECK(std::find(s.begin(), s.end(), std::numeric_limits<std::int32_t>::lowest()) != s.end());
}

TEST_CASE("domain names round trip") {
    for (Domain d : all_domains) {
        auto parsed = parse_domain(to_string(d));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == d);
    }
    CHECK_FALSE(parse_domain("quaternion").has_value());
    CHECK(to_string(Domain::float64) == "float-double");
}

TEST_CASE("concurrent lookups while registering") {
    std::vector<std::thread> readers;
    std::atomic<int> failures{0};
    for (int t = 0; t < 4; ++t) {
        readers.emplace_back([&] {
            for (int i = 0; i < 2000; ++i) {
                auto s = registry_get<double>("plus_times");
                if (s.mul(2.0, 4.0) != 8.0) ++failures;
            }
        });
    }
    for (int k = 0; k < 20; ++k) {
        register_semiring(Semiring<std::int32_t>{"concurrent_" + std::to_string(k), ops::max_monoid<std::int32_t>(),
                                                 ops::min<std::int32_t>()});
    }
    for (auto& r : readers) r.join();
    CHECK(failures == 0);
    CHECK(SemiringRegistry::global().contains("concurrent_19", Domain::int32));
}
