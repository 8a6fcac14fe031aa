#pragma once

#include <stdexcept>
#include <string>

namespace msl {

enum class errc {
    different_lines,
    empty_multisegment,
    too_large,
    unsupported_line,
    no_derivative_point,
    unequal_sums,
    not_ordered,
    infinite_line,
    mixed_lines,
    not_aperiodic,
    parse_error,
    unknown_line,
    invalid_argument,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::different_lines: return "DifferentLines";
        case errc::empty_multisegment: return "EmptyMultisegment";
        case errc::too_large: return "TooLarge";
        case errc::unsupported_line: return "UnsupportedLine";
        case errc::no_derivative_point: return "NoDerivativePoint";
        case errc::unequal_sums: return "UnequalSums";
        case errc::not_ordered: return "NotOrdered";
        case errc::infinite_line: return "InfiniteLine";
        case errc::mixed_lines: return "MixedLines";
        case errc::not_aperiodic: return "NotAperiodic";
        case errc::parse_error: return "ParseError";
        case errc::unknown_line: return "UnknownLine";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

}  // namespace msl
