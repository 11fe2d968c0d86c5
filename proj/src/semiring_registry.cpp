#include "sgk/semiring_registry.hpp"

#include <algorithm>

namespace sgk {

std::string_view to_string(Law law) noexcept {
    switch (law) {
        case Law::commutativity: return "commutativity";
        case Law::associativity: return "associativity";
        case Law::identity: return "identity";
        case Law::annihilator: return "annihilator";
    }
    return "?";
}

bool is_builtin_semiring(std::string_view name) noexcept {
    return std::find(std::begin(builtin_semiring_names), std::end(builtin_semiring_names), name) !=
           std::end(builtin_semiring_names);
}

LawCheckError::LawCheckError(std::string_view semiring, LawViolation violation)
    : Error(ErrorCode::law_check_failure, "semiring '" + std::string(semiring) +
                                              "' violates " + std::string(to_string(violation.law)) +
                                              " at " + violation.witnesses),
      violation_(std::move(violation)) {}

namespace {

template <Scalar T>
std::optional<AnySemiring> builtin_as_any(std::string_view name) {
    if (auto s = builtin_semiring<T>(name)) return AnySemiring(std::move(*s));
    return std::nullopt;
}

std::optional<AnySemiring> builtin_for(std::string_view name, Domain domain) {
    switch (domain) {
        case Domain::boolean: return builtin_as_any<bool>(name);
        case Domain::int8: return builtin_as_any<std::int8_t>(name);
        case Domain::int16: return builtin_as_any<std::int16_t>(name);
        case Domain::int32: return builtin_as_any<std::int32_t>(name);
        case Domain::int64: return builtin_as_any<std::int64_t>(name);
        case Domain::uint8: return builtin_as_any<std::uint8_t>(name);
        case Domain::uint16: return builtin_as_any<std::uint16_t>(name);
        case Domain::uint32: return builtin_as_any<std::uint32_t>(name);
        case Domain::uint64: return builtin_as_any<std::uint64_t>(name);
        case Domain::float32: return builtin_as_any<float>(name);
        case Domain::float64: return builtin_as_any<double>(name);
        case Domain::complex64: return builtin_as_any<std::complex<double>>(name);
        case Domain::opaque: return builtin_as_any<OpaqueHandle>(name);
    }
    return std::nullopt;
}

}  // namespace

SemiringRegistry& SemiringRegistry::global() {
    static SemiringRegistry registry;
    return registry;
}

AnySemiring SemiringRegistry::get(std::string_view name, Domain domain) const {
    if (is_builtin_semiring(name)) {
        if (auto s = builtin_for(name, domain)) return std::move(*s);
        throw Error(ErrorCode::domain_not_supported, "semiring '" + std::string(name) +
                                                         "' is not defined over " +
                                                         std::string(to_string(domain)));
    }
    std::shared_lock lock(mutex_);
    if (auto it = user_.find(std::pair{std::string(name), domain}); it != user_.end()) return it->second;
    bool known = std::any_of(user_.begin(), user_.end(),
                             [&](const auto& entry) { return entry.first.first == name; });
    if (known)
        throw Error(ErrorCode::domain_not_supported, "semiring '" + std::string(name) +
                                                         "' is not registered over " +
                                                         std::string(to_string(domain)));
    throw Error(ErrorCode::unknown_name, "unknown semiring '" + std::string(name) + "'");
}

bool SemiringRegistry::contains(std::string_view name, Domain domain) const {
    if (is_builtin_semiring(name)) return builtin_for(name, domain).has_value();
    std::shared_lock lock(mutex_);
    return user_.contains(std::pair{std::string(name), domain});
}

std::vector<std::string> SemiringRegistry::names() const {
    std::vector<std::string> out(std::begin(builtin_semiring_names), std::end(builtin_semiring_names));
    std::shared_lock lock(mutex_);
    for (const auto& [key, _] : user_) {
        if (std::find(out.begin(), out.end(), key.first) == out.end()) out.push_back(key.first);
    }
    return out;
}

std::string SemiringRegistry::insert(std::string name, Domain domain, AnySemiring s) {
    if (name.empty()) throw Error(ErrorCode::invalid_argument, "semiring name must not be empty");
    if (is_builtin_semiring(name))
        throw Error(ErrorCode::duplicate_name, "semiring '" + name + "' is a built-in name");
    std::unique_lock lock(mutex_);
    auto [it, inserted] = user_.try_emplace(std::pair{name, domain}, std::move(s));
    if (!inserted)
        throw Error(ErrorCode::duplicate_name, "semiring '" + name + "' is already registered over " +
                                                   std::string(to_string(domain)));
    return name;
}

}  // namespace sgk
