#include "circumlab/error.hpp"

namespace circumlab {

const char* errc_name(errc c) {
    switch (c) {
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::self_loop: return "self_loop";
    case errc::too_large: return "too_large";
    case errc::malformed_token: return "malformed_token";
    case errc::invalid_argument: return "invalid_argument";
    case errc::resource_limit: return "resource_limit";
    case errc::delta_too_small: return "delta_too_small";
    case errc::not_two_connected: return "not_two_connected";
    case errc::not_longest_path: return "not_longest_path";
    case errc::inequality_violated: return "inequality_violated";
    case errc::no_vine_found: return "no_vine_found";
    case errc::construction_invalid: return "construction_invalid";
    case errc::condition_not_satisfied: return "condition_not_satisfied";
    case errc::proof_gap_violated: return "proof_gap_violated";
    case errc::chain_violation: return "chain_violation";
    }
    return "unknown";
}

Error::Error(errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ResourceLimitError::ResourceLimitError(std::uint64_t yielded, std::uint64_t b)
    : Error(errc::resource_limit,
            "enumeration budget of " + std::to_string(b) + " steps exceeded after " +
                std::to_string(yielded) + " paths"),
      paths_yielded(yielded), budget(b) {}

void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace circumlab
