#pragma once

#include <stdexcept>
#include <string>

namespace ratsum {

// A certificate leaf failed its structural invariant during expansion.
class invalid_block_error : public std::runtime_error {
public:
    explicit invalid_block_error(const std::string& what) : std::runtime_error(what) {}
};

// decompose() was asked for an excluded N = 4^k(8t+7).
class not_representable_error : public std::domain_error {
public:
    explicit not_representable_error(const std::string& what) : std::domain_error(what) {}
};

// A required registry entry (and its fallback, if any) is missing.
class missing_registry_error : public std::runtime_error {
public:
    explicit missing_registry_error(const std::string& what) : std::runtime_error(what) {}
};

// Persistence: the file is not syntactically valid JSON.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Persistence: valid JSON that does not match the expected schema.
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed data whose mathematical content fails re-verification.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ratsum
