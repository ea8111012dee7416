#ifndef IASI_ERROR_HPP
#define IASI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace iasi {

enum class ErrorKind {
    InvalidParameter,
    DisjointnessViolation,
    NotASubgraph,
    UnknownVertex,
    IncompleteLabeling,
    InfeasiblePattern,
    TooLargeInput,
    Overflow,
    ParseError,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace iasi

#endif
