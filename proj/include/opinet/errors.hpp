#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace opinet {

enum class ErrorCode {
    ok = 0,
    invalid_argument,
    degenerate_degrees,
    infeasible_sequence,
    stub_mismatch,
    matching_stuck,
    target_unreachable,
    invalid_levels,
    invalid_probability,
    no_in_neighbors,
    empty_state,
    empty_input,
    duplicate_id,
    malformed_record,
    insufficient_support,
    too_few_records,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown when the swap budget runs out; carries the best state reached so
// callers can decide whether a near miss is usable.
class TargetUnreachableError : public Error {
public:
    TargetUnreachableError(const std::string& message, double best_r, std::uint64_t steps_used)
        : Error(ErrorCode::target_unreachable, message), best_r_(best_r), steps_used_(steps_used) {}

    double best_r() const noexcept { return best_r_; }
    std::uint64_t steps_used() const noexcept { return steps_used_; }

private:
    double best_r_;
    std::uint64_t steps_used_;
};

} // namespace opinet
