#ifndef THRESHSPEC_ERRORS_HPP
#define THRESHSPEC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace threshspec {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("empty input") {}
};

struct IllegalCharacter : Error {
    std::size_t position;
    explicit IllegalCharacter(std::size_t pos)
        : Error("illegal character at position " + std::to_string(pos)),
          position(pos) {}
};

struct FirstBitNotZero : Error {
    FirstBitNotZero() : Error("creation sequence must begin with 0") {}
};

struct NotConnected : Error {
    NotConnected() : Error("operation requires a connected sequence") {}
    explicit NotConnected(const std::string& what) : Error(what) {}
};

struct OrderTooSmall : Error {
    explicit OrderTooSmall(const std::string& what) : Error(what) {}
};

struct OrderTooLarge : Error {
    explicit OrderTooLarge(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// A singular subcase fired on a path that requires the generic ones.
struct SingularityEncountered : Error {
    int step;
    explicit SingularityEncountered(int m)
        : Error("singular subcase at step m=" + std::to_string(m)), step(m) {}
};

struct PoleAtInput : Error {
    explicit PoleAtInput(const std::string& what) : Error(what) {}
};

struct ToleranceTooSmall : Error {
    explicit ToleranceTooSmall(const std::string& what) : Error(what) {}
};

struct DidNotConverge : Error {
    int sweeps;
    explicit DidNotConverge(int s)
        : Error("Jacobi sweep limit reached after " + std::to_string(s) +
                " sweeps"),
          sweeps(s) {}
};

struct AmbiguousProbe : Error {
    explicit AmbiguousProbe(const std::string& what) : Error(what) {}
};

// The two inertia routes disagree on a quantity both are proven to compute.
struct InertiaMismatch : Error {
    explicit InertiaMismatch(const std::string& what) : Error(what) {}
};

}  // namespace threshspec

#endif
