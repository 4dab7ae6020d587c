#pragma once

#include <stdexcept>
#include <string>

namespace pucare {

// Error taxonomy shared by all modules. The CLI maps kinds onto exit codes:
// usage/parameter -> 1, everything data-shaped -> 2.
enum class ErrorKind {
    usage,       // bad command line
    parameter,   // invalid argument value or shape precondition
    data,        // malformed or inconsistent input data
    format,      // unrecognized file format (bad magic)
    version,     // recognized format, unsupported version
    corruption,  // structurally broken file (truncation, bad offsets)
    io,          // OS-level read/write failure
    skip,        // operation not applicable to this sample; caller may omit it
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + " error: " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace pucare
