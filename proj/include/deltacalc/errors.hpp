#pragma once

#include <stdexcept>
#include <string>

namespace dc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    explicit NotPrime(long p) : Error("not prime: " + std::to_string(p)) {}
};
struct ReducibleModulus : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct VariableCountMismatch : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct ExponentOverflow : Error {
    using Error::Error;
};
struct BadVariableSupport : Error {
    using Error::Error;
};
struct FractionalDelta : Error {
    using Error::Error;
};
struct ResourceLimit : Error {
    using Error::Error;
};
struct NonPolynomialResult : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct UsageError : Error {
    using Error::Error;
};

} // namespace dc
