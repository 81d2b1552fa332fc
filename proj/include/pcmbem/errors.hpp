#pragma once

#include <stdexcept>
#include <string>

namespace pcm {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NearSingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested accuracy not reached; carries the best available estimate.
struct AccuracyError : std::runtime_error {
    double best_estimate;
    AccuracyError(const std::string& msg, double best)
        : std::runtime_error(msg), best_estimate(best) {}
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pcm
