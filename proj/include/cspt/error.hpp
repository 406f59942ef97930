#pragma once

#include <stdexcept>
#include <string>

namespace cspt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural misuse of a graph operation (missing edge, unknown vertex, loop).
class GraphError : public Error {
public:
    using Error::Error;
};

/// An input exceeds the size an exact routine is willing to handle.
class GuardError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of a solver or builder call does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace cspt
