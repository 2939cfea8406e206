#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toric {

// Every toolkit error carries a stable machine-readable code; the CLI maps it
// into the error JSON emitted on stderr.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// A precondition on user-supplied data was violated.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("input", what) {}
};

/// Exact integer arithmetic left the native word size. Never wrapped.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error("overflow", what) {}
};

/// Input is valid but beyond the configured exhaustive-enumeration bounds.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error("resource", what) {}
};

/// Malformed JSON or a document that does not match the documented schemas.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& what) : Error("schema", what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace toric
