#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stormcast {

/// Base class for every error the library raises on contract violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptySeries : public Error {
public:
    EmptySeries() : Error("series has no points") {}
};

class DuplicateName : public Error {
public:
    explicit DuplicateName(const std::string& name)
        : Error("duplicate column name: " + name) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

/// Parse failure in an input file; carries 1-based line and column when known.
class FormatError : public Error {
public:
    FormatError(std::string message, std::size_t line = 0, std::size_t column = 0)
        : Error(locate(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string locate(const std::string& message, std::size_t line, std::size_t column) {
        std::string out = message;
        if (line > 0) out += " (line " + std::to_string(line);
        if (line > 0 && column > 0) out += ", column " + std::to_string(column);
        if (line > 0) out += ")";
        return out;
    }

    std::size_t line_;
    std::size_t column_;
};

class EmptyEventSet : public Error {
public:
    EmptyEventSet() : Error("event filter matched no events") {}
};

class TooFewObservations : public Error {
public:
    explicit TooFewObservations(const std::string& what) : Error(what) {}
};

class FitDiverged : public Error {
public:
    explicit FitDiverged(const std::string& what) : Error(what) {}
};

class MaskTooAggressive : public Error {
public:
    explicit MaskTooAggressive(const std::string& what) : Error(what) {}
};

class IncompleteCandidate : public Error {
public:
    explicit IncompleteCandidate(const std::string& what) : Error(what) {}
};

class MissingValues : public Error {
public:
    explicit MissingValues(const std::string& what) : Error(what) {}
};

class TooShort : public Error {
public:
    explicit TooShort(const std::string& what) : Error(what) {}
};

class SingularDesign : public Error {
public:
    explicit SingularDesign(const std::string& what) : Error(what) {}
};

class DegenerateSeries : public Error {
public:
    explicit DegenerateSeries(const std::string& what) : Error(what) {}
};

class DegenerateLabels : public Error {
public:
    explicit DegenerateLabels(const std::string& what) : Error(what) {}
};

class SchemaMismatch : public Error {
public:
    explicit SchemaMismatch(const std::string& what) : Error(what) {}
};

class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

} // namespace stormcast
