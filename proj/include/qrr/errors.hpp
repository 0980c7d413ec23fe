#pragma once

#include <stdexcept>
#include <string>

namespace qrr {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitSeries : Error {
    NonUnitSeries() : Error("series has zero constant term and cannot be inverted") {}
};

struct OrderTooLarge : Error {
    explicit OrderTooLarge(int requested, int available)
        : Error("comparison order " + std::to_string(requested) +
                " exceeds series order " + std::to_string(available)) {}
};

struct NegativeLength : Error {
    explicit NegativeLength(long n)
        : Error("Pochhammer length " + std::to_string(n) + " is negative") {}
};

struct NegativeExponentTerm : Error {
    explicit NegativeExponentTerm(long exponent)
        : Error("term with negative q-exponent " + std::to_string(exponent) +
                " survives in a series context") {}
};

struct MonomialOutOfRange : Error {
    using Error::Error;
};

struct UnsupportedArgument : Error {
    using Error::Error;
};

struct UnsupportedAParameter : Error {
    UnsupportedAParameter() : Error("weak forms require a Bailey pair relative to a = 1") {}
};

struct SingularTerm : Error {
    explicit SingularTerm(long n)
        : Error("Appell-Lerch denominator vanishes at n = " + std::to_string(n)) {}
};

struct NonRealSum : Error {
    NonRealSum() : Error("cyclotomic class sums differ; imaginary part does not cancel") {}
};

struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

struct SyntaxError : Error {
    int line, column;
    SyntaxError(const std::string& what, int line_, int column_)
        : Error(what + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
          line(line_), column(column_) {}
};

struct UnknownIdentifier : SyntaxError {
    UnknownIdentifier(const std::string& name, int line_, int column_)
        : SyntaxError("unknown identifier '" + name + "'", line_, column_) {}
};

struct MissingX : Error {
    MissingX() : Error("expression mentions x but no value for x was supplied") {}
};

}  // namespace qrr
