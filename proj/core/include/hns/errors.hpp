#pragma once

#include <stdexcept>
#include <string>

namespace hns {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The unit-equation denominator vanishes at the chosen probe.
struct SingularProbe : Error {
    using Error::Error;
};

/// A basis transform with (numerically) zero determinant.
struct SingularTransform : Error {
    using Error::Error;
};

/// A family generator was instantiated with a parameter its table forbids.
struct ZeroParameter : Error {
    using Error::Error;
};

/// diagonal_reduce was handed a table with nonzero cross products.
struct NotDiagonal : Error {
    using Error::Error;
};

/// A diagonal table whose beta11/alpha22 entries block a constant unit.
struct NoConstantUnit : Error {
    using Error::Error;
};

/// k^2 = a22*b22 + b22^2/4 is not positive; no real transition to R+R exists.
struct NonPositiveDiscriminant : Error {
    using Error::Error;
};

/// An operation requiring a constant unit was called on a non-unital table.
struct NonUnitalSystem : Error {
    using Error::Error;
};

/// System-document parse failure, with the offending key when known.
struct ParseError : Error {
    std::string key;
    std::string reason;
    ParseError(std::string k, std::string r)
        : Error("parse error: key '" + k + "': " + r),
          key(std::move(k)),
          reason(std::move(r)) {}
};

}  // namespace hns
