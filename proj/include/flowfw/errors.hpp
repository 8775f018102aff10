#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowfw {

// Root of every error raised by the library.
class FlowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CycleError : public FlowError { using FlowError::FlowError; };
class StructureError : public FlowError { using FlowError::FlowError; };
class DuplicateEdgeError : public FlowError { using FlowError::FlowError; };
class DimensionError : public FlowError { using FlowError::FlowError; };
class NegativeFlowError : public FlowError { using FlowError::FlowError; };
class ConfigError : public FlowError { using FlowError::FlowError; };
class EmptyActiveSetError : public FlowError { using FlowError::FlowError; };
class ZeroIterateError : public FlowError { using FlowError::FlowError; };
class GraphMismatchError : public FlowError { using FlowError::FlowError; };
class EmptyListError : public FlowError { using FlowError::FlowError; };
class PathValidationError : public FlowError { using FlowError::FlowError; };
class PathExplosionError : public FlowError { using FlowError::FlowError; };
class SearchSpaceError : public FlowError { using FlowError::FlowError; };
class InvalidArgument : public FlowError { using FlowError::FlowError; };

class ParseError : public FlowError {
public:
    ParseError(std::size_t line, const std::string& what)
        : FlowError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline void require_length(std::size_t got, std::size_t expected, const char* what) {
    if (got != expected) {
        throw DimensionError(std::string(what) + ": expected length " + std::to_string(expected) +
                             ", got " + std::to_string(got));
    }
}

}  // namespace flowfw
