#pragma once

#include <stdexcept>
#include <string>

namespace treeinf {

// Malformed or out-of-domain input: bad tree structure, size mismatches,
// unparsable files. The CLI maps this to exit code 2.
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource guard was exceeded (enumeration too large).
// The CLI maps this to exit code 3.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace treeinf
