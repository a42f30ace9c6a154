#pragma once

#include <stdexcept>
#include <string>

namespace heunred {

// Machine-readable failure kinds, surfaced verbatim in CLI diagnostics.
enum class errc {
    incompatible_radicand,
    division_by_zero,
    excluded_value,
    not_on_orbit,
    coincident_points,
    undefined_second_solution,
    undefined_hl,
    nonzero_constant_term,
    trivial_equation,
    degenerate_equation,
    nontrivial_equation,
    inconsistent_exponents,
    uncertified_root,
    not_equianharmonic,
    unsupported_invariants,
    undefined_side,
    branch_ambiguity,
    malformed_input,
    internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace heunred
