#pragma once

#include <stdexcept>
#include <string>

namespace oecsim {

// Bad user input: config files, CLI values, matrix files.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem trouble; message carries the path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Singular or near-singular matrix handed to the LU kernel.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oecsim
