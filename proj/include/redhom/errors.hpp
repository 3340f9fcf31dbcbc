#pragma once

#include <stdexcept>

namespace redhom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct NotReductive : Error { using Error::Error; };
struct AxiomsViolated : Error { using Error::Error; };
struct UnknownModel : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct NonSquare : Error { using Error::Error; };
struct NonInvertibleRealization : Error { using Error::Error; };

// File/text-format errors. Position information, when available, is baked
// into the message ("byte 123: ...").
struct ParseError : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DuplicateEntry : Error { using Error::Error; };
struct NonCanonicalPair : Error { using Error::Error; };

} // namespace redhom
