#pragma once

#include <stdexcept>
#include <string>

namespace polyrec {

// Error taxonomy; the CLI maps each class to a distinct exit code.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a documented size cap (vertex/edge limits, f^O overflow).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tied dot products in a linear functional orientation; caller must perturb.
struct DegeneracyError : InputError {
    explicit DegeneracyError(const std::string& msg) : InputError(msg) {}
};

// A face family failed lattice validation (gradedness, atoms, cycle 2-faces...).
struct NotPolytopalError : std::runtime_error {
    explicit NotPolytopalError(const std::string& msg) : std::runtime_error(msg) {}
};

// reconstruct() refuses h >= 3: counterexamples exist at h = 3.
struct UnsupportedClassError : std::runtime_error {
    UnsupportedClassError(int h_, const std::string& msg)
        : std::runtime_error(msg), h(h_) {}
    int h;
};

// A reconstruction stage produced output that fails validation; message names
// the stage and the offending data.
struct ReconstructionError : std::runtime_error {
    explicit ReconstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polyrec
