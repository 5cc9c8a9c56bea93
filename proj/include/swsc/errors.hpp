#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace swsc {

using Symbol = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected (sigma, lambda, c) or an inconsistent frozen header.
class ParameterError : public Error {
public:
    using Error::Error;
};

class CorruptStreamError : public Error {
public:
    explicit CorruptStreamError(const std::string& what,
                                std::optional<std::uint64_t> symbol_index = std::nullopt)
        : Error(symbol_index ? what + " (at symbol " + std::to_string(*symbol_index) + ")" : what),
          symbol_index_(symbol_index) {}

    std::optional<std::uint64_t> symbol_index() const noexcept { return symbol_index_; }

private:
    std::optional<std::uint64_t> symbol_index_;
};

// Broken coder invariant. Never raised by valid input; indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace swsc
