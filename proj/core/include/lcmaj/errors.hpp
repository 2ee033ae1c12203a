#pragma once

#include <stdexcept>
#include <string>

namespace lcmaj {

// Invalid user input (malformed JSON, violated input invariants). CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant breach (a bug, not a user mistake). CLI exit code 2.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lcmaj
