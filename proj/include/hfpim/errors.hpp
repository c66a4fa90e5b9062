#pragma once

#include <stdexcept>
#include <string>

namespace hfpim {

// Error hierarchy used across the library. Subcommands map these to
// process exit codes (see tools/hfpim.cpp).

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct InvalidRank : Error {
    using Error::Error;
};

struct TrainingDiverged : Error {
    using Error::Error;
};

struct CalibrationFailed : Error {
    using Error::Error;
};

struct PlacementFailed : Error {
    using Error::Error;
};

struct IOError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hfpim
