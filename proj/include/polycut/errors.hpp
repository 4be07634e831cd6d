#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace polycut {

/// Malformed or out-of-domain input (bad file, bad flag, invariant violation).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Refusal to start a computation whose size exceeds the configured guard.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The operation is well-defined but the requested case is outside the
/// supported construction (for example certificate cycles that are too short).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Maximum vertex / candidate count accepted by enumeration guards.
/// Overridable through the POLYCUT_GUARD_MAX_VERTICES environment variable.
inline std::size_t guard_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("POLYCUT_GUARD_MAX_VERTICES")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 16;
    }();
    return limit;
}

} // namespace polycut
