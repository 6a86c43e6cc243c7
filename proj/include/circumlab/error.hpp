#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace circumlab {

enum class errc {
    index_out_of_range,
    self_loop,
    too_large,
    malformed_token,
    invalid_argument,
    resource_limit,
    delta_too_small,
    not_two_connected,
    not_longest_path,
    inequality_violated,
    no_vine_found,
    construction_invalid,
    condition_not_satisfied,
    proof_gap_violated,
    chain_violation,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what);
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Enumeration ran past its step budget; carries how far it got so callers
// never mistake truncation for completion.
class ResourceLimitError : public Error {
public:
    ResourceLimitError(std::uint64_t yielded, std::uint64_t budget);
    std::uint64_t paths_yielded;
    std::uint64_t budget;
};

[[noreturn]] void fail(errc code, const std::string& what);

} // namespace circumlab
