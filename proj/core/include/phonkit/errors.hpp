// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phonkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The word normalizes to the empty string.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

class UnsupportedAlgorithmError : public Error {
public:
    using Error::Error;
};

// A code token is outside the alphabet a matcher expects.
class InvalidCodeError : public Error {
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

class RuleParseError : public ParseError {
public:
    using ParseError::ParseError;
};

class EmptyFileError : public Error {
public:
    using Error::Error;
};

class EmptyDictionaryError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class FingerprintMismatchError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace phonkit
