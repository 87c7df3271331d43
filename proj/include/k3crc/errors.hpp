#pragma once

#include <stdexcept>
#include <string>

namespace k3crc {

// Base of every domain error raised by the library. Precondition violations
// on plain arguments (negative orders, n < 1, ...) use std::invalid_argument.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define K3CRC_DEFINE_ERROR(Name)              \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

K3CRC_DEFINE_ERROR(NonUnitLeadingCoefficient);
K3CRC_DEFINE_ERROR(PrecisionExceeded);
K3CRC_DEFINE_ERROR(MixedBasis);
K3CRC_DEFINE_ERROR(NoSolution);
K3CRC_DEFINE_ERROR(HalfIntegerPower);
K3CRC_DEFINE_ERROR(ZeroDenominator);
K3CRC_DEFINE_ERROR(ParityViolation);

#undef K3CRC_DEFINE_ERROR

} // namespace k3crc
