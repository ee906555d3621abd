#pragma once

#include <stdexcept>
#include <string>

namespace dslv {

enum class ErrorKind {
    invalid_argument,   // malformed problem data or parameters
    index_out_of_range, // lattice access outside the stored index range
    degenerate,         // lambda(lambda - 4) == 0 where a representation divides by it
    numeric             // a computation could not meet its accuracy contract
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace dslv
