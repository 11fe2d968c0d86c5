#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "sgk/domain.hpp"
#include "sgk/error.hpp"
#include "sgk/laws.hpp"
#include "sgk/ops.hpp"

namespace sgk {

using AnySemiring =
    std::variant<Semiring<bool>, Semiring<std::int8_t>, Semiring<std::int16_t>,
                 Semiring<std::int32_t>, Semiring<std::int64_t>, Semiring<std::uint8_t>,
                 Semiring<std::uint16_t>, Semiring<std::uint32_t>, Semiring<std::uint64_t>,
                 Semiring<float>, Semiring<double>, Semiring<std::complex<double>>,
                 Semiring<OpaqueHandle>>;

/// Names of the built-in semirings, in registry order.
inline constexpr std::string_view builtin_semiring_names[] = {
    "plus_times", "max_plus", "min_plus", "min_max", "or_and", "min_select2nd",
};

bool is_builtin_semiring(std::string_view name) noexcept;

/**
 * Built-in semiring `name` over T, or std::nullopt when the name is known but not
 * defined over T (e.g. max_plus over boolean). Throws unknown_name otherwise.
 *
 *   plus_times     (+, *, 0)          integers wrap, all numeric domains
 *   max_plus       (max, +, -inf)     ordered non-boolean domains
 *   min_plus       (min, +, +inf)     ordered non-boolean domains
 *   min_max        (min, max, +inf)   ordered domains
 *   or_and         (or, and, false)   boolean
 *   min_select2nd  (min, 2nd, +inf)   ordered non-boolean domains
 *
 * Infinities are encoded as the domain extremes for integers; tropical addition
 * saturates there instead of wrapping.
 */
template <Scalar T>
std::optional<Semiring<T>> builtin_semiring(std::string_view name) {
    if (!is_builtin_semiring(name))
        throw Error(ErrorCode::unknown_name, "unknown semiring '" + std::string(name) + "'");

    constexpr bool numeric = !std::is_same_v<T, bool> && !std::is_same_v<T, OpaqueHandle>;
    if (name == "plus_times") {
        if constexpr (numeric) return Semiring<T>{"plus_times", ops::plus_monoid<T>(), ops::times<T>()};
    } else if (name == "max_plus") {
        if constexpr (WeightScalar<T>)
            return Semiring<T>{"max_plus", ops::max_monoid<T>(), ops::tropical_plus<T>(encoded_min<T>())};
    } else if (name == "min_plus") {
        if constexpr (WeightScalar<T>)
            return Semiring<T>{"min_plus", ops::min_monoid<T>(), ops::tropical_plus<T>(encoded_max<T>())};
    } else if (name == "min_max") {
        if constexpr (OrderedScalar<T>) return Semiring<T>{"min_max", ops::min_monoid<T>(), ops::max<T>()};
    } else if (name == "or_and") {
        if constexpr (std::is_same_v<T, bool>) return Semiring<T>{"or_and", ops::lor_monoid(), ops::land()};
    } else if (name == "min_select2nd") {
        if constexpr (WeightScalar<T>)
            return Semiring<T>{"min_select2nd", ops::min_monoid<T>(), ops::select_second<T>(encoded_max<T>())};
    }
    return std::nullopt;
}

/// Throws law_check_failure; carries the violated law and its witnesses.
class LawCheckError : public Error {
public:
    LawCheckError(std::string_view semiring, LawViolation violation);

    Law law() const noexcept { return violation_.law; }
    const std::string& witnesses() const noexcept { return violation_.witnesses; }

private:
    LawViolation violation_;
};

/**
 * Name -> semiring lookup. Built-ins are resolved per domain on demand; user semirings
 * are law-checked at registration and keyed by (name, domain). Reads may run
 * concurrently; registrations are serialized.
 */
class SemiringRegistry {
public:
    /// Process-wide registry used by the CLI and bindings.
    static SemiringRegistry& global();

    AnySemiring get(std::string_view name, Domain domain) const;

    template <Scalar T>
    Semiring<T> get(std::string_view name) const {
        return std::get<Semiring<T>>(get(name, domain_of<T>));
    }

    /// Registers `s` under `s.name` for its domain and returns that name.
    template <Scalar T>
    std::string add(Semiring<T> s) {
        if (auto violation = check_semiring_laws(s)) throw LawCheckError(s.name, *violation);
        return insert(std::move(s.name), domain_of<T>, AnySemiring(s));
    }

    bool contains(std::string_view name, Domain domain) const;

    /// Every name `get` can resolve, built-ins first.
    std::vector<std::string> names() const;

private:
    std::string insert(std::string name, Domain domain, AnySemiring s);

    mutable std::shared_mutex mutex_;
    std::map<std::pair<std::string, Domain>, AnySemiring, std::less<>> user_;
};

/// registry_get on the global registry.
inline AnySemiring registry_get(std::string_view name, Domain domain) {
    return SemiringRegistry::global().get(name, domain);
}

template <Scalar T>
Semiring<T> registry_get(std::string_view name) {
    return SemiringRegistry::global().get<T>(name);
}

/// register_semiring on the global registry.
template <Scalar T>
std::string register_semiring(Semiring<T> s) {
    return SemiringRegistry::global().add(std::move(s));
}

}  // namespace sgk
