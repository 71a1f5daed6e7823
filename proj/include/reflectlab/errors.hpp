#pragma once
#include <stdexcept>
#include <string>

namespace reflectlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointOutsideDomain : Error {
    using Error::Error;
};
struct StencilExitsDomain : Error {
    using Error::Error;
};
struct NotAComplexSpace : Error {
    using Error::Error;
};
struct NoMetricAvailable : Error {
    using Error::Error;
};
struct UnsupportedSpace : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct InvalidQ : Error {
    using Error::Error;
};
struct InvalidFamily : Error {
    using Error::Error;
};
struct NTooSmall : Error {
    using Error::Error;
};
struct UnknownType : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct ValueLeftTargetDomain : Error {
    using Error::Error;
};
struct InsufficientStencil : Error {
    using Error::Error;
};
struct SigmaLeavesDomain : Error {
    using Error::Error;
};
struct FixedSetValueMismatch : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    using Error::Error;
};
struct AllSamplesNearPoles : Error {
    using Error::Error;
};
struct LineNotOnSurface : Error {
    using Error::Error;
};
struct ConfigParseError : Error {
    using Error::Error;
};

} // namespace reflectlab
