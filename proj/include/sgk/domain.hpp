#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <type_traits>

namespace sgk {

using Index = std::uint64_t;

/// Identifier for user data that lives outside the library. Only equality is defined.
struct OpaqueHandle {
    std::uint64_t id = 0;
    friend bool operator==(OpaqueHandle, OpaqueHandle) = default;
};

enum class Domain {
    boolean,
    int8,
    int16,
    int32,
    int64,
    uint8,
    uint16,
    uint32,
    uint64,
    float32,
    float64,
    complex64,  // complex<double>
    opaque,
};

inline constexpr Domain all_domains[] = {
    Domain::boolean, Domain::int8,    Domain::int16,   Domain::int32,     Domain::int64,
    Domain::uint8,   Domain::uint16,  Domain::uint32,  Domain::uint64,    Domain::float32,
    Domain::float64, Domain::complex64, Domain::opaque,
};

std::string_view to_string(Domain d) noexcept;
std::optional<Domain> parse_domain(std::string_view name) noexcept;

template <class T>
struct domain_traits;

#define SGK_DOMAIN_TRAIT(type, tag)                   \
    template <>                                       \
    struct domain_traits<type> {                      \
        static constexpr Domain value = Domain::tag;  \
    };

SGK_DOMAIN_TRAIT(bool, boolean)
SGK_DOMAIN_TRAIT(std::int8_t, int8)
SGK_DOMAIN_TRAIT(std::int16_t, int16)
SGK_DOMAIN_TRAIT(std::int32_t, int32)
SGK_DOMAIN_TRAIT(std::int64_t, int64)
SGK_DOMAIN_TRAIT(std::uint8_t, uint8)
SGK_DOMAIN_TRAIT(std::uint16_t, uint16)
SGK_DOMAIN_TRAIT(std::uint32_t, uint32)
SGK_DOMAIN_TRAIT(std::uint64_t, uint64)
SGK_DOMAIN_TRAIT(float, float32)
SGK_DOMAIN_TRAIT(double, float64)
SGK_DOMAIN_TRAIT(std::complex<double>, complex64)
SGK_DOMAIN_TRAIT(OpaqueHandle, opaque)

#undef SGK_DOMAIN_TRAIT

/// A type usable as the carrier set of a container. Containers are templated on it,
/// so a single container can never mix domains.
template <class T>
concept Scalar = requires { domain_traits<T>::value; };

template <Scalar T>
inline constexpr Domain domain_of = domain_traits<T>::value;

template <class T>
inline constexpr bool is_complex_v = std::is_same_v<T, std::complex<double>>;

/// Totally ordered numeric domains: min/max monoids are defined on these.
template <class T>
concept OrderedScalar = Scalar<T> && std::is_arithmetic_v<T>;

/// Ordered domains excluding boolean; tropical semirings and graph weights live here.
template <class T>
concept WeightScalar = OrderedScalar<T> && !std::is_same_v<T, bool>;

/// Domains with a textual representation (everything except opaque handles).
template <class T>
concept NumericScalar = Scalar<T> && !std::is_same_v<T, OpaqueHandle>;

/// Encoded +infinity: largest representable value, or +inf for floating point.
template <OrderedScalar T>
constexpr T encoded_max() noexcept {
    if constexpr (std::is_floating_point_v<T>) {
        return std::numeric_limits<T>::infinity();
    } else {
        return std::numeric_limits<T>::max();
    }
}

/// Encoded -infinity: smallest representable value, or -inf for floating point.
template <OrderedScalar T>
constexpr T encoded_min() noexcept {
    if constexpr (std::is_floating_point_v<T>) {
        return -std::numeric_limits<T>::infinity();
    } else {
        return std::numeric_limits<T>::lowest();
    }
}

}  // namespace sgk
