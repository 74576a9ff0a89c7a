#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qmetrics/source_text.hpp"

namespace qmetrics {

/// Base class for all errors produced while analyzing one input.
/// The message never carries the file path; callers prepend it.
class AnalysisError : public std::runtime_error {
public:
    AnalysisError(const std::string& message, SourceSpan where)
        : std::runtime_error(message), span_(where) {}

    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

class LexError final : public AnalysisError {
public:
    LexError(SourceSpan where, char offending)
        : AnalysisError(std::string("unexpected character '") + offending + "'", where) {}
};

class ParseError final : public AnalysisError {
public:
    ParseError(SourceSpan where, std::string_view expected, std::string_view found)
        : AnalysisError("expected " + std::string(expected) + ", found " + std::string(found),
                        where) {}
};

class DuplicateRegisterError final : public AnalysisError {
public:
    DuplicateRegisterError(SourceSpan where, std::string_view name)
        : AnalysisError("duplicate register '" + std::string(name) + "'", where) {}
};

class UnknownGateError final : public AnalysisError {
public:
    UnknownGateError(SourceSpan where, std::string_view name)
        : AnalysisError("unknown gate '" + std::string(name) + "'", where) {}
};

class UnsupportedSyntaxError final : public AnalysisError {
public:
    UnsupportedSyntaxError(SourceSpan where, std::string_view construct)
        : AnalysisError("unsupported syntax: " + std::string(construct), where) {}
};

class IndentationError final : public AnalysisError {
public:
    IndentationError(SourceSpan where, std::string_view detail)
        : AnalysisError("bad indentation: " + std::string(detail), where) {}
};

/// A block header with no body statement; raised by the CFG builder.
class EmptyBodyError final : public AnalysisError {
public:
    explicit EmptyBodyError(SourceSpan where)
        : AnalysisError("block header has no body statement", where) {}
};

/// Cyclomatic complexity of a zero-node graph is undefined.
class EmptyGraphError final : public std::runtime_error {
public:
    EmptyGraphError() : std::runtime_error("cyclomatic complexity undefined on empty graph") {}
};

/// Structural problem in a design document.
class SchemaError final : public std::runtime_error {
public:
    SchemaError(std::string_view location, std::string_view message)
        : std::runtime_error(std::string(location) + ": " + std::string(message)) {}
};

class UnknownComponentError final : public std::runtime_error {
public:
    explicit UnknownComponentError(std::string_view endpoint)
        : std::runtime_error("connector endpoint references undeclared component '" +
                             std::string(endpoint) + "'") {}
};

}  // namespace qmetrics
