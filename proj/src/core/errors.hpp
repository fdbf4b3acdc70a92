#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bctp {

// Error taxonomy shared by the core, the C API and the CLI. The CLI exit
// contract maps Parse/Config to exit 2 and everything else to exit 1.
enum class ErrorKind {
    Parse,       // malformed input document
    Config,      // method configuration violates an invariant
    Validation,  // input data violates a domain invariant
    NotFound,    // unknown function or factor reference
    Evaluation,  // pipeline reached a non-evaluable state (e.g. factor <= 0)
    Internal,    // consistency bug, not caused by input
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          kind_(kind),
          path_(std::move(path)) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Dotted field path into the offending document ("functions[2].processes[0].step_count").
    const std::string& path() const noexcept { return path_; }

private:
    ErrorKind kind_;
    std::string path_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& path, const std::string& message) {
    throw Error(kind, path, message);
}

}  // namespace bctp
