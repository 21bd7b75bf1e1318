#pragma once

#include <stdexcept>
#include <string>

namespace strongpoly {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (non-simple graph where a simple one
/// is required, bad vertex index, malformed tree, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured budget or size cap was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace strongpoly
