#pragma once

#include <stdexcept>
#include <string>

namespace kblocked {

// Raised when an operation's precondition does not hold for its input.
class PreconditionError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A bounded construction (projection retries, point placement) ran out of attempts.
class BudgetExhausted : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace kblocked
