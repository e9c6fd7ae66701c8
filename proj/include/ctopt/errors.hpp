#pragma once

#include <stdexcept>
#include <string>

namespace ctopt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct IndexOutOfRangeError : Error { using Error::Error; };
struct NotUnitaryError : Error { using Error::Error; };
struct InvalidCoefficientsError : Error { using Error::Error; };
struct InvalidBasisError : Error { using Error::Error; };
struct BiseparableChannelError : Error { using Error::Error; };
struct DegenerateChannelError : Error { using Error::Error; };
struct InternalInconsistencyError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace ctopt
