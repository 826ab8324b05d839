#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

// Domain errors carry a stable name that the CLI prints verbatim and maps to
// exit code 1.  Usage errors (bad flags, malformed input files) are a
// separate class mapped to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define QWEYL_ERROR(NAME)                                                    \
    class NAME : public Error {                                              \
    public:                                                                  \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}       \
    }

QWEYL_ERROR(NotFiniteType);
QWEYL_ERROR(OrbitCapExceeded);
QWEYL_ERROR(MorphismCapExceeded);
QWEYL_ERROR(AmbiguousLongest);
QWEYL_ERROR(InfiniteBound);
QWEYL_ERROR(NonUnique);
QWEYL_ERROR(NotTypical);
QWEYL_ERROR(WrongAtypicality);
QWEYL_ERROR(NotStandardType);
QWEYL_ERROR(PresentationMismatch);
QWEYL_ERROR(HalfIntegerResult);
QWEYL_ERROR(NoSuchM);
QWEYL_ERROR(PreconditionUnmet);

#undef QWEYL_ERROR

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qweyl
