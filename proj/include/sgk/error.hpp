#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgk {

enum class ErrorCode {
    unknown_name,
    domain_not_supported,
    duplicate_name,
    law_check_failure,
    index_out_of_range,
    duplicate_index,
    dimension_mismatch,
    domain_mismatch,
    non_square,
    not_symmetric,
    self_loop,
    negative_weight,
    dangling_vertex,
    alpha_out_of_range,
    empty_sources,
    parse_error,
    unsupported_header,
    unserializable_domain,
    negative_index,
    invalid_argument,
    internal_invariant,
};

std::string_view to_string(ErrorCode code) noexcept;

/**
 * Library error. Every failure raised by sgk carries one of the codes above so
 * callers (the CLI in particular) can map failures without parsing messages.
 */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sgk
