#pragma once

#include <stdexcept>
#include <string>

namespace qboson {

// Argument outside the mathematical domain of an operation (label outside the
// convergence disk, s beyond the first zero of e_q, q outside (0,1], ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A series or node sum failed to meet its tolerance within the configured cap.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Density-matrix construction rejected its input. The code distinguishes the
// three admissibility conditions so callers can report which one failed.
class validation_error : public std::runtime_error {
public:
    enum class code {
        not_hermitian,
        trace_not_one,
        not_positive_semidefinite,
        dimension_mismatch,
    };

    validation_error(code c, const std::string& what)
        : std::runtime_error(what), code_(c) {}

    code which() const noexcept { return code_; }

private:
    code code_;
};

// Quadrature grid incompatible with the operands it is used with.
class grid_error : public std::invalid_argument {
public:
    explicit grid_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qboson
