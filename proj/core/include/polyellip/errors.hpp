#ifndef POLYELLIP_ERRORS_HPP
#define POLYELLIP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyellip {

/// Thrown when |D_{m-1}(z)| is too small to divide by (critical or
/// degenerate point of the iteration function).
class DegenerateDenominator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a cut normal has (essentially) zero length.
class DegenerateNormal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure with the byte offset of the offending character and a
/// short description of what was expected there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) +
                             ": expected " + expected),
          offset_(offset),
          expected_(expected) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

/// Raised when a full root set is required but the root search gave up
/// before finding all of them.
class IncompleteRootSet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace polyellip

#endif  // POLYELLIP_ERRORS_HPP
