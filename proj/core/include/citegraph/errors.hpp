#pragma once

#include <stdexcept>
#include <string>

namespace citegraph {

// Bad input data: unreadable files, malformed schemas, inconsistent records.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration or parameters.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Metadata service could not be reached or answered with an error.
class TransportError : public std::runtime_error {
public:
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace citegraph
