#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace tubecat {

enum class ErrorKind {
    NotAPartition,
    Crossing,
    ShapeMismatch,
    BoundExceeded,
    EmptyList,
    NothingToRotate,
    DepthExceeded,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by validation when four labels x1<x2<x3<x4 have {x1,x3} and {x2,x4}
/// in distinct blocks.
class CrossingError : public Error {
public:
    CrossingError(std::array<int, 4> witness, const std::string& what)
        : Error(ErrorKind::Crossing, what), witness_(witness) {}

    const std::array<int, 4>& witness() const noexcept { return witness_; }

private:
    std::array<int, 4> witness_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotAPartition: return "NotAPartition";
        case ErrorKind::Crossing: return "Crossing";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::EmptyList: return "EmptyList";
        case ErrorKind::NothingToRotate: return "NothingToRotate";
        case ErrorKind::DepthExceeded: return "DepthExceeded";
        case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

}  // namespace tubecat
