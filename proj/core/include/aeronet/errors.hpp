#pragma once

#include <stdexcept>
#include <string>

namespace aeronet {

// Thrown when no transmission range up to Tr_max satisfies the requested
// connectivity property. The message carries the witnessing constraint.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Scenario/plan document does not conform to the schema. Messages include the
// JSON field path of the offending value.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Random scenario generation could not place the requested orbits.
class PackingError : public std::runtime_error {
public:
    explicit PackingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aeronet
