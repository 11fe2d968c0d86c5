#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <vector>
#include <string>
#include <string_view>
#include <vector>

#include "sgk/domain.hpp"
#include "sgk/ops.hpp"

namespace sgk {

enum class Law { commutativity, associativity, identity, annihilator };

std::string_view to_string(Law law) noexcept;

struct LawViolation {
    Law law;
    std::string witnesses;
};

namespace detail {

template <class F>
std::uint64_t ulp_distance(F a, F b) {
    static_assert(std::is_floating_point_v<F>);
    if (a == b) return 0;
    if (std::isnan(a) && std::isnan(b)) return 0;
    if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<std::uint64_t>::max();
    using Bits = std::conditional_t<sizeof(F) == 4, std::int32_t, std::int64_t>;
    // Map the sign-magnitude encoding onto a monotone integer line.
    auto ordered = [](F x) -> std::int64_t {
        auto bits = std::bit_cast<Bits>(x);
        return bits < 0 ? static_cast<std::int64_t>(std::numeric_limits<Bits>::min()) - bits
                        : static_cast<std::int64_t>(bits);
    };
    std::int64_t da = ordered(a);
    std::int64_t db = ordered(b);
    return da > db ? static_cast<std::uint64_t>(da - db) : static_cast<std::uint64_t>(db - da);
}

template <class T>
std::string render(const T& v) {
    std::ostringstream os;
    if constexpr (std::is_same_v<T, OpaqueHandle>) {
        os << "handle#" << v.id;
    } else if constexpr (std::is_same_v<T, bool>) {
        os << (v ? "true" : "false");
    } else if constexpr (std::is_integral_v<T>) {
        os << +v;
    } else {
        os.precision(17);
        os << v;
    }
    return os.str();
}

}  // namespace detail

/// Equality used by the law checker: exact for discrete domains, within `max_ulps` for
/// floating point (component-wise for complex).
template <Scalar T>
bool law_equal(const T& a, const T& b, std::uint64_t max_ulps = 1) {
    if constexpr (std::is_floating_point_v<T>) {
        return detail::ulp_distance(a, b) <= max_ulps;
    } else if constexpr (is_complex_v<T>) {
        return detail::ulp_distance(a.real(), b.real()) <= max_ulps &&
               detail::ulp_distance(a.imag(), b.imag()) <= max_ulps;
    } else {
        return a == b;
    }
}

/**
 * Sample pool for law checking over domain T: the semiring zero, the usual
 * identities, the domain extremes (finite ones only for floating point) and
 * pseudo-random values from a fixed seed. Floating samples are multiples of 1/16.
 */
template <Scalar T>
std::vector<T> law_samples(const T& zero, std::size_t random_count = 1000) {
    std::vector<T> out{zero};
    std::mt19937_64 rng(0x5eed5eedULL);
    if constexpr (std::is_same_v<T, bool>) {
        out = {false, true};
    } else if constexpr (std::is_same_v<T, OpaqueHandle>) {
        for (std::uint64_t i = 0; i < 8; ++i) out.push_back(OpaqueHandle{i});
    } else if constexpr (std::is_integral_v<T>) {
        using L = std::numeric_limits<T>;
        for (T v : {T(0), T(1), T(2), L::max(), L::lowest(), T(L::max() - 1), T(L::lowest() + 1)})
            out.push_back(v);
        if constexpr (std::is_signed_v<T>) out.push_back(T(-1));
        std::uniform_int_distribution<long long> small(-20, 20);
        std::uniform_int_distribution<unsigned long long> any;
        for (std::size_t i = 0; i < random_count; ++i) {
            out.push_back(i % 2 == 0 ? static_cast<T>(small(rng)) : static_cast<T>(any(rng)));
        }
    } else if constexpr (std::is_floating_point_v<T>) {
        for (T v : {T(0), T(1), T(-1), T(2), T(0.5), T(-0.25), T(1024), T(-4096), T(1 << 20)})
            out.push_back(v);
        std::uniform_int_distribution<int> k(-4000, 4000);
        for (std::size_t i = 0; i < random_count; ++i) out.push_back(T(k(rng)) / T(16));
    } else {
        using R = typename T::value_type;
        for (T v : {T(0, 0), T(1, 0), T(0, 1), T(-2, 0.5), T(1024, -8)}) out.push_back(v);
        std::uniform_int_distribution<int> k(-4000, 4000);
        for (std::size_t i = 0; i < random_count; ++i)
            out.push_back(T(R(k(rng)) / R(16), R(k(rng)) / R(16)));
    }
    return out;
}

/**
 * Sampled check of the semiring contract. The leading `exhaustive` samples (zero,
 * identities, extremes) are combined exhaustively; on top of that every law gets `draws`
 * random tuples from the whole pool. Returns the first violated law with its witnesses.
 */
template <Scalar T>
std::optional<LawViolation> check_semiring_laws(const Semiring<T>& s, const std::vector<T>& samples,
                                                std::size_t draws = 1000,
                                                std::size_t exhaustive = 12,
                                                std::uint64_t seed = 20120512ULL) {
    const auto& add = s.add;
    const T& zero = s.zero();
    auto witness = [](std::initializer_list<T> vals) {
        std::string w = "(";
        bool first = true;
        for (const T& v : vals) {
            if (!first) w += ", ";
            w += detail::render(v);
            first = false;
        }
        return w + ")";
    };
    if (samples.empty()) return std::nullopt;

    const std::vector<T> head(samples.begin(), samples.begin() + std::min(exhaustive, samples.size()));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);

    auto commutes = [&](const T& a, const T& b) { return law_equal(add(a, b), add(b, a)); };
    for (const T& a : head)
        for (const T& b : head)
            if (!commutes(a, b)) return LawViolation{Law::commutativity, witness({a, b})};
    for (std::size_t t = 0; t < draws; ++t) {
        const T& a = samples[pick(rng)];
        const T& b = samples[pick(rng)];
        if (!commutes(a, b)) return LawViolation{Law::commutativity, witness({a, b})};
    }

    auto associates = [&](const T& a, const T& b, const T& c) {
        return law_equal(add(add(a, b), c), add(a, add(b, c)));
    };
    for (const T& a : head)
        for (const T& b : head)
            for (const T& c : head)
                if (!associates(a, b, c))
                    return LawViolation{Law::associativity, witness({a, b, c})};
    for (std::size_t t = 0; t < draws; ++t) {
        const T& a = samples[pick(rng)];
        const T& b = samples[pick(rng)];
        const T& c = samples[pick(rng)];
        if (!associates(a, b, c)) return LawViolation{Law::associativity, witness({a, b, c})};
    }

    for (const T& a : samples) {
        if (!law_equal(add(a, zero), a) || !law_equal(add(zero, a), a))
            return LawViolation{Law::identity, witness({a})};
    }
    for (const T& a : samples) {
        if (!law_equal(s.mul(zero, a), zero) || !law_equal(s.mul(a, zero), zero))
            return LawViolation{Law::annihilator, witness({a})};
    }
    return std::nullopt;
}

template <Scalar T>
std::optional<LawViolation> check_semiring_laws(const Semiring<T>& s) {
    auto samples = law_samples<T>(s.zero());
    return check_semiring_laws(s, samples);
}

}  // namespace sgk
