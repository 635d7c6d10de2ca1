#pragma once

#include <stdexcept>
#include <string>

namespace riskpref {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A domain-type invariant was violated at construction.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Ladder construction impossible: |x_max| == |x_min|.
class DegenerateProspectError : public Error {
public:
    using Error::Error;
};

/// Answer text could not be parsed into the expected structure.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Decision sequence has more than one accept->reject transition in
/// preference order.
class MonotonicityError : public Error {
public:
    using Error::Error;
};

/// Prompt was not produced by a recognized template.
class TemplateError : public Error {
public:
    using Error::Error;
};

/// HTTP transport failed after the retry budget was exhausted.
class TransportError : public Error {
public:
    using Error::Error;
};

/// HTTP endpoint returned a non-success status.
class EndpointError : public Error {
public:
    using Error::Error;
};

/// Replay journal has no entry for the requested prompt digest.
class MissError : public Error {
public:
    using Error::Error;
};

/// A record in an input file violates the schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

class DuplicateIdError : public Error {
public:
    using Error::Error;
};

class EmptyBatteryError : public Error {
public:
    using Error::Error;
};

/// Parsed amount lies outside the allowed range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Case-study answer missing an asset or carrying a malformed number.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Case-study allocation does not sum to the endowment.
class SumError : public Error {
public:
    using Error::Error;
};

/// Grouped sample has fewer than two distinct groups.
class GroupError : public Error {
public:
    using Error::Error;
};

/// Parallel lists of a grouped sample differ in length.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A group label is absent from the reference ordering.
class UnknownGroupError : public Error {
public:
    using Error::Error;
};

class EmptyBankError : public Error {
public:
    using Error::Error;
};

class EmptyExemplarError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace riskpref
