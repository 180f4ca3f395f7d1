#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mint {

/// Base of every kernel error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// stack_truncate past the bottom of a context stack.
class StackError : public Error {
public:
    using Error::Error;
};

/// An environment operation applied to an environment of the wrong shape.
class EnvError : public Error {
public:
    using Error::Error;
};

struct SourceLoc {
    std::size_t line = 0;
    std::size_t column = 0;

    bool known() const { return line != 0; }
    std::string str() const { return std::to_string(line) + ":" + std::to_string(column); }
};

class ParseError : public Error {
public:
    ParseError(SourceLoc loc, const std::string& message)
        : Error(loc.str() + ": " + message), loc_(loc), message_(message) {}

    SourceLoc loc() const { return loc_; }
    const std::string& message() const { return message_; }

private:
    SourceLoc loc_;
    std::string message_;
};

}  // namespace mint
