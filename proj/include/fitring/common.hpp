#pragma once

#include <stdexcept>
#include <string>

namespace fitring {

// Raised when a computation would need more p-adic precision than the
// current RingConfig carries. Callers may retry with a larger Nprec.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct NotAUnit : std::runtime_error {
    explicit NotAUnit(const std::string& what) : std::runtime_error(what) {}
};

struct NotContained : std::runtime_error {
    explicit NotContained(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigMismatch : std::runtime_error {
    explicit ConfigMismatch(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration (minors, presentations) would exceed its configured cap.
struct CapacityExceeded : std::runtime_error {
    explicit CapacityExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fitring
