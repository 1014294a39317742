#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace iondec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mismatched or non-representable dimensions in quantity arithmetic.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation (negative time, U_k <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Inconsistent simulation or run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

class FitError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    ValidationError(std::string salt, std::string field, const std::string& what)
        : Error(salt + ": " + field + ": " + what), salt_(std::move(salt)), field_(std::move(field)) {}

    const std::string& salt() const noexcept { return salt_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::string salt_;
    std::string field_;
};

}  // namespace iondec
