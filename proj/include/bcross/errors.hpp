#pragma once

#include <stdexcept>
#include <string>

namespace bcross {

// An exponential search hit its configured cap. Callers decide whether that
// is a usage error (CLI exit 2) or a skip (verification suite).
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A structural fact the library re-derives on every run failed to hold.
// This is never a user error: if it fires, either the computation or the
// claimed structure is wrong, and it must not pass silently.
struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bcross
