#pragma once

#include <stdexcept>
#include <string>

namespace wallx {

// Violated precondition of a library operation. Messages name the
// precondition so the CLI can print a one-line diagnostic.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A series operation could not certify its result exact at the
// requested order. Never silently degraded to a best-effort value.
class truncation_error : public domain_error {
public:
    explicit truncation_error(const std::string& what) : domain_error(what) {}
};

class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wallx
