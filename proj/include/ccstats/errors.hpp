#pragma once

#include <stdexcept>
#include <string>

namespace ccstats {

/// Request outside the supported parameter space (distinct from a malformed
/// request): unsupported sampling spec, theorem/spec mismatch, and the like.
/// The CLI maps this to exit code 3.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ccstats
