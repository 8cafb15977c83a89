#pragma once

#include <stdexcept>
#include <string>

namespace fedsel {

/// Error type thrown for all validation and precondition failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

} // namespace fedsel
