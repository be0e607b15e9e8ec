#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace riordan {

/// A named example. `run` throws on mismatch; any exception counts as failure.
struct NamedCheck {
    std::string name;
    std::function<void()> run;
};

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The worked examples: matrices, series, antecedents, moments, lookup, CLI.
std::vector<NamedCheck> builtin_checks();

/// Runs every check (concurrently when `parallel`); outcomes keep input order.
std::vector<CheckOutcome> run_checks(const std::vector<NamedCheck>& checks, bool parallel = true);

}  // namespace riordan
