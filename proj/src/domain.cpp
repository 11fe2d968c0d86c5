#include "sgk/domain.hpp"

#include "sgk/error.hpp"

namespace sgk {

std::string_view to_string(Domain d) noexcept {
    switch (d) {
        case Domain::boolean: return "boolean";
        case Domain::int8: return "signed-int-8";
        case Domain::int16: return "signed-int-16";
        case Domain::int32: return "signed-int-32";
        case Domain::int64: return "signed-int-64";
        case Domain::uint8: return "unsigned-int-8";
        case Domain::uint16: return "unsigned-int-16";
        case Domain::uint32: return "unsigned-int-32";
        case Domain::uint64: return "unsigned-int-64";
        case Domain::float32: return "float-single";
        case Domain::float64: return "float-double";
        case Domain::complex64: return "complex-double";
        case Domain::opaque: return "opaque-handle";
    }
    return "?";
}

std::optional<Domain> parse_domain(std::string_view name) noexcept {
    for (Domain d : all_domains) {
        if (to_string(d) == name) return d;
    }
    return std::nullopt;
}

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::unknown_name: return "unknown-name";
        case ErrorCode::domain_not_supported: return "domain-not-supported";
        case ErrorCode::duplicate_name: return "duplicate-name";
        case ErrorCode::law_check_failure: return "law-check-failure";
        case ErrorCode::index_out_of_range: return "index-out-of-range";
        case ErrorCode::duplicate_index: return "duplicate-index";
        case ErrorCode::dimension_mismatch: return "dimension-mismatch";
        case ErrorCode::domain_mismatch: return "domain-mismatch";
        case ErrorCode::non_square: return "non-square";
        case ErrorCode::not_symmetric: return "not-symmetric";
        case ErrorCode::self_loop: return "self-loop";
        case ErrorCode::negative_weight: return "negative-weight";
        case ErrorCode::dangling_vertex: return "dangling-vertex";
        case ErrorCode::alpha_out_of_range: return "alpha-out-of-range";
        case ErrorCode::empty_sources: return "empty-sources";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::unsupported_header: return "unsupported-header";
        case ErrorCode::unserializable_domain: return "unserializable-domain";
        case ErrorCode::negative_index: return "negative-index";
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::internal_invariant: return "internal-invariant";
    }
    return "?";
}

}  // namespace sgk
