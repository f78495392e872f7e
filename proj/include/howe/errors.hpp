#pragma once

#include <stdexcept>
#include <string>

namespace howe {

/// Operands live over different generator sets or algebra specs, or a
/// generator/flag does not exist.
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Degree requested for an inhomogeneous (or zero) element.
struct DegreeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The requested configuration is outside what is implemented.
struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An identity that must hold by construction failed; indicates a bug.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A raising operator failed to annihilate the vacuum.
struct NotHighestWeightError : std::runtime_error {
    NotHighestWeightError(std::string label, std::string image)
        : std::runtime_error("raising operator " + label + " does not annihilate the vacuum: " + image),
          operator_label(std::move(label)),
          image_of_vacuum(std::move(image)) {}
    std::string operator_label;
    std::string image_of_vacuum;
};

/// A semi-infinite operator application would touch indices outside the
/// truncation window.
struct WindowError : std::runtime_error {
    WindowError(const std::string& what, int needed) : std::runtime_error(what), required_window(needed) {}
    int required_window;
};

/// A polarization or calibration convention cannot produce the requested
/// normalization (commutator off the vacuum line, anchor mismatch).
struct ConventionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace howe
