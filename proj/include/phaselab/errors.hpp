#pragma once

#include <stdexcept>
#include <string>

namespace phaselab {

// Base for all recoverable errors. exit_code() maps the category to the
// process exit status used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg, int exit_code)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)), exit_code_(exit_code) {}

    const std::string& kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return exit_code_; }

private:
    std::string kind_;
    int exit_code_;
};

#define PHASELAB_ERROR(NAME, CODE)                                        \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& msg) : Error(#NAME, msg, CODE) {} \
    }

// wavelet_core
PHASELAB_ERROR(UnsupportedOrder, 10);
PHASELAB_ERROR(InsufficientSmoothness, 11);

// mra_transform
PHASELAB_ERROR(NonDyadicLength, 20);
PHASELAB_ERROR(TooManyLevels, 21);
PHASELAB_ERROR(MalformedCoefficients, 22);
PHASELAB_ERROR(NonDyadicShape, 23);
PHASELAB_ERROR(UnknownLevel, 24);
PHASELAB_ERROR(ShapeMismatch, 25);

// operator_ns
PHASELAB_ERROR(NonDyadicSize, 30);
PHASELAB_ERROR(LengthMismatch, 31);

// moyal_dynamics
PHASELAB_ERROR(GridMismatch, 40);
PHASELAB_ERROR(UnstableStep, 41);

// ensembles
PHASELAB_ERROR(InconsistentHbar, 50);
PHASELAB_ERROR(NonDyadicPGrid, 51);
PHASELAB_ERROR(WeightsNotNormalized, 52);

// galerkin_solver
PHASELAB_ERROR(QuadratureUnderResolved, 60);
PHASELAB_ERROR(UnsupportedNonlinearity, 61);
PHASELAB_ERROR(SingularSystem, 62);
PHASELAB_ERROR(NewtonDiverged, 63);

// pattern_lab
PHASELAB_ERROR(EmptyField, 70);

// cli_io
PHASELAB_ERROR(ParseError, 80);
PHASELAB_ERROR(ValidationError, 81);
PHASELAB_ERROR(IoError, 82);

#undef PHASELAB_ERROR

}  // namespace phaselab
