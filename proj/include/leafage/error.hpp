#pragma once

#include <stdexcept>
#include <string>

namespace leafage {

enum class ErrorKind {
    NotChordal,
    Disconnected,
    CapExceeded,
    InvalidPeo,
    WrongClass,          // input is not in the class an exact formula needs
    HypothesisViolated,
    ConstructionFailed,
    BadParams,
    Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}
