#pragma once

#include <stdexcept>
#include <string>

namespace lcdawg {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied bad input: sentinel byte inside a text or pattern, empty
// pattern, and so on.
class InputError : public Error {
public:
    using Error::Error;
};

// Position or length outside the valid range of a string or variable.
class BoundsError : public Error {
public:
    using Error::Error;
};

// A structural invariant failed during construction. Signals a bug, never
// triggered by valid input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Reference implementations refuse inputs above their size guard.
class OracleLimitError : public Error {
public:
    using Error::Error;
};

// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

enum class FormatErrc {
    bad_magic,
    unsupported_version,
    truncated,
    id_out_of_range,
    invariant_violation,
    trailing_bytes,
};

const char* to_string(FormatErrc code) noexcept;

// Malformed serialized index.
class FormatError : public Error {
public:
    FormatError(FormatErrc code, const std::string& what)
        : Error(std::string(to_string(code)) + ": " + what), code_(code) {}

    FormatErrc code() const noexcept { return code_; }

private:
    FormatErrc code_;
};

}  // namespace lcdawg
