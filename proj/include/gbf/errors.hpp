#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbf {

/// Base class for every error raised by the solver library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite, malformed, or out-of-contract argument values.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Index outside the valid coefficient or knot range.
class IndexError : public Error {
public:
    using Error::Error;
};

/// Evaluation point outside the mesh domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Linear system has a vanishing pivot; row() reports where.
class SingularSystemError : public Error {
public:
    SingularSystemError(std::ptrdiff_t row, const std::string& what)
        : Error(what), row_(row) {}
    std::ptrdiff_t row() const noexcept { return row_; }

private:
    std::ptrdiff_t row_;
};

/// Non-finite value produced while assembling or advancing; node() reports
/// the collocation node, or -1 when the node is not known at the throw site.
class NumericOverflowError : public Error {
public:
    explicit NumericOverflowError(std::ptrdiff_t node,
                                  const std::string& what = "non-finite value during assembly")
        : Error(what), node_(node) {}
    std::ptrdiff_t node() const noexcept { return node_; }

private:
    std::ptrdiff_t node_;
};

/// Boundary elimination is impossible because the end weight a1 vanishes
/// (lambda = 4 makes the basis interpolatory at the knots).
class DegenerateBoundaryError : public Error {
public:
    using Error::Error;
};

/// Bad run configuration; key() and line() locate the offending entry
/// (line 0 means the command line rather than a config file).
class ConfigError : public Error {
public:
    ConfigError(std::string key, std::size_t line, const std::string& what)
        : Error(what), key_(std::move(key)), line_(line) {}
    const std::string& key() const noexcept { return key_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string key_;
    std::size_t line_;
};

}  // namespace gbf
