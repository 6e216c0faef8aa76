#pragma once

#include <stdexcept>
#include <string>

namespace cmtors {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A composite cofactor survived the configured factoring effort.
class FactorizationFailure : public Error {
public:
    using Error::Error;
};

// Polynomial division left a nonzero remainder where exactness was required.
class InexactDivision : public Error {
public:
    using Error::Error;
};

class SingularCurve : public Error {
public:
    using Error::Error;
};

class NotCM : public Error {
public:
    using Error::Error;
};

// Torsion counts that no group in Phi^cm(2) explains. Never expected for CM input.
class GroupOutsidePhi2 : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace cmtors
