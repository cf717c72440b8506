#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diag12 {

// Operands from different rings (modulus or variable count differ).
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search space or table that would exceed its configured budget. The
// required size saturates at UINT64_MAX.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace diag12
