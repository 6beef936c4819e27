#pragma once

#include <stdexcept>
#include <string>

namespace camtax {

// Base for everything this library throws. The CLI maps subclasses to
// exit codes (see tools/camtax.cpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Usage / configuration problems (exit 1).
struct UsageError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

// Data / validation problems (exit 2).
struct ParseError : Error {
    using Error::Error;
};
struct RenderError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct ConstructionError : Error {
    using Error::Error;
};
struct ExpansionError : Error {
    using Error::Error;
};
struct InputError : Error {
    using Error::Error;
};
struct IntegrityError : Error {
    using Error::Error;
};
struct NotReadyError : Error {
    using Error::Error;
};

// Backend problems (exit 3).
struct BackendError : Error {
    using Error::Error;
};
struct CassetteMissError : BackendError {
    using BackendError::BackendError;
};

} // namespace camtax
