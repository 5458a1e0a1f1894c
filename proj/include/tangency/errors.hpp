#pragma once

#include <stdexcept>
#include <string>

namespace tangency {

// Two roots so the CLI can map failures onto exit codes: bad input vs. a
// numerical method that gave up.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TANGENCY_DEFINE_ERROR(Name, Base)            \
    class Name : public Base {                       \
    public:                                          \
        explicit Name(const std::string& what)       \
            : Base(std::string(#Name ": ") + what) {} \
    };

TANGENCY_DEFINE_ERROR(InvalidPartition, ConfigError)
TANGENCY_DEFINE_ERROR(DimensionMismatch, ConfigError)
TANGENCY_DEFINE_ERROR(UnsupportedLabel, ConfigError)
TANGENCY_DEFINE_ERROR(UnsupportedFamily, ConfigError)
TANGENCY_DEFINE_ERROR(TooLarge, ConfigError)
TANGENCY_DEFINE_ERROR(BadDirection, ConfigError)
TANGENCY_DEFINE_ERROR(InvalidConfig, ConfigError)

TANGENCY_DEFINE_ERROR(DegenerateVector, NumericalError)
TANGENCY_DEFINE_ERROR(NearParallelRows, NumericalError)
TANGENCY_DEFINE_ERROR(NewtonDiverged, NumericalError)
TANGENCY_DEFINE_ERROR(SingularJacobian, NumericalError)
TANGENCY_DEFINE_ERROR(AmbiguousType, NumericalError)
TANGENCY_DEFINE_ERROR(RepresentativeDegenerate, NumericalError)
TANGENCY_DEFINE_ERROR(MultiplicityMismatch, NumericalError)
TANGENCY_DEFINE_ERROR(NoConvergence, NumericalError)
TANGENCY_DEFINE_ERROR(InsufficientSamples, NumericalError)
TANGENCY_DEFINE_ERROR(CoincidentPoint, NumericalError)

#undef TANGENCY_DEFINE_ERROR

} // namespace tangency
