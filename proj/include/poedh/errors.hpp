#pragma once

#include <stdexcept>
#include <string>

namespace poedh {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Twist has neither a usable rotation nor translation component.
struct ZeroTwistError : Error {
    using Error::Error;
};

// Axis direction passed to a screw constructor is not unit length.
struct NonUnitDirectionError : Error {
    using Error::Error;
};

// Operation requires a model in a different POE convention.
struct ConventionError : Error {
    using Error::Error;
};

// Joint-variable vector length does not match the model.
struct ArityError : Error {
    using Error::Error;
};

// Local-convention model does not carry exactly n+1 frames.
struct FrameCountError : Error {
    using Error::Error;
};

// Factorization asked for a rotational screw but got something else.
struct NotRotationalError : Error {
    using Error::Error;
};

// Factorization asked for a translational screw but got something else.
struct NotTranslationalError : Error {
    using Error::Error;
};

// Model file is syntactically or structurally invalid.
struct ParseError : Error {
    using Error::Error;
};

// Model file carries a missing or unsupported schema tag.
struct SchemaVersionError : Error {
    using Error::Error;
};

}  // namespace poedh
