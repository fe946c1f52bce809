#ifndef KDIFF_ERRORS_HPP
#define KDIFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kdiff {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero field element") {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& where)
        : Error("ring mismatch in " + where) {}
};

struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& msg) : Error(msg) {}
};

struct NonHomogeneousInput : Error {
    explicit NonHomogeneousInput(const std::string& where)
        : Error("non-homogeneous input in " + where) {}
};

struct StabilizationViolated : Error {
    explicit StabilizationViolated(const std::string& msg) : Error(msg) {}
};

struct NotZeroDimensional : Error {
    explicit NotZeroDimensional(const std::string& msg) : Error(msg) {}
};

struct InfiniteDimensional : Error {
    explicit InfiniteDimensional(const std::string& msg) : Error(msg) {}
};

struct FormDegreeOutOfRange : Error {
    explicit FormDegreeOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NonzeroConstantTerm : Error {
    NonzeroConstantTerm()
        : Error("triangular decomposition requires zero constant term") {}
};

struct PointAtInfinity : Error {
    PointAtInfinity()
        : Error("point has vanishing first coordinate (lies on Z(X0))") {}
};

struct X0ZeroDivisor : Error {
    X0ZeroDivisor()
        : Error("X0 is a zerodivisor: the ideal is not saturated; "
                "apply a linear change of coordinates and retry") {}
};

struct UnsupportedScheme : Error {
    explicit UnsupportedScheme(const std::string& msg) : Error(msg) {}
};

struct CharTooSmall : Error {
    explicit CharTooSmall(const std::string& msg) : Error(msg) {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

struct ProfileUnavailable : Error {
    explicit ProfileUnavailable(const std::string& msg) : Error(msg) {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'") {}
};

struct WrongRing : Error {
    explicit WrongRing(const std::string& msg) : Error(msg) {}
};

struct BadSchemeFile : Error {
    explicit BadSchemeFile(const std::string& msg)
        : Error("bad scheme file: " + msg) {}
};

struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& msg) : Error(msg) {}
};

}  // namespace kdiff

#endif
