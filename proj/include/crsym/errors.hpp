#ifndef CRSYM_ERRORS_HPP
#define CRSYM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace crsym {

/// Machine-readable failure codes surfaced through the CLI exit status
/// and the JSON error object.
enum class Errc {
    // parsing
    syntax_error,
    not_real,
    w_illegal,
    antiholomorphic_coefficient,
    // algebra
    malformed_input,
    not_divisible,
    division_by_zero,
    both_zero,
    // grading / model validation
    not_homogenizable,
    pluriharmonic_terms,
    not_homogeneous,
    infinite_type,
    zero_polynomial,
    invalid_weight,
    // fields
    zero_field,
    non_rigid_input,
    // chains
    not_positive_weight,
    not_a_rotation,
    rank_exceeds_one,
    non_terminating,
    degenerate_model,
    degree_mismatch,
    pluriharmonic_result,
    zero_result,
    zero_jacobian,
    infeasible_budget,
    // cli
    no_rotation,
    io_error,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Position of a parse failure, byte-accurate.
struct ParseDiagnostic {
    std::size_t offset = 0;
    int line = 1;
    int column = 1;
    std::string message;
    std::vector<std::string> expected;

    std::string render() const;
};

class ParseError : public Error {
public:
    ParseError(Errc code, ParseDiagnostic diag)
        : Error(code, diag.render()), diag_(std::move(diag)) {}

    const ParseDiagnostic& diagnostic() const { return diag_; }

private:
    ParseDiagnostic diag_;
};

} // namespace crsym

#endif
