#pragma once

#include <stdexcept>
#include <string>

namespace forestprob {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, graph6 strings, family spec strings).
class ParseError : public Error {
public:
    using Error::Error;
};

// A structurally invalid value: family invariant violations, bad graph
// constructions, orderings that are not permutations.
class SpecError : public Error {
public:
    using Error::Error;
};

// A size guard tripped (brute force edge cap, DP vertex cap, isomorphism
// vertex cap). Overridable where the operation takes a force flag.
class GuardError : public Error {
public:
    using Error::Error;
};

}  // namespace forestprob
