#pragma once

#include <stdexcept>
#include <string>

namespace treehardy {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A k2-only operation received a sequence with a nonzero tail.
class DomainKError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

class NotPositiveError : public Error {
public:
    using Error::Error;
};

// A series construction was requested at a point outside the unit disk.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// An operator failed the causal/stationary block structure test.
class NotStationaryCausalError : public Error {
public:
    using Error::Error;
};

// A quantity was requested outside the depth window where the finite
// truncation reproduces it exactly.
class ValidityRegionError : public Error {
public:
    using Error::Error;
};

// The interpolation recursion produced a non-invertible constant.
class RecursionBreakdownError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace treehardy
