#ifndef PIRJOINT_ERRORS_HPP
#define PIRJOINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pirjoint {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument values: bad primes, out-of-range indices, clashing parameters.
struct ParamError : Error {
    using Error::Error;
};

/// Requested object exceeds the implementation budget (e.g. field order).
struct CapacityError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// A storage-code construction failed its build-time validation.
struct ConstructionError : Error {
    using Error::Error;
};

/// A T-subset decode hit a rank-deficient stacked system.
struct DecodeError : Error {
    using Error::Error;
};

/// A desired coordinate is outside the row space of the received answers.
struct ReconstructionError : Error {
    using Error::Error;
};

struct UnsupportedFamilyError : Error {
    using Error::Error;
};

/// Randomized coefficient search exhausted its attempt budget.
struct SearchError : Error {
    SearchError(const std::string& msg, long attempts, long singular_coeff_rejections,
                long failing_subset_rejections)
        : Error(msg),
          attempts(attempts),
          singular_coeff_rejections(singular_coeff_rejections),
          failing_subset_rejections(failing_subset_rejections) {}

    long attempts;
    long singular_coeff_rejections;
    long failing_subset_rejections;
};

}  // namespace pirjoint

#endif
