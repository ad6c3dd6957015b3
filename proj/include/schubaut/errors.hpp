// errors.hpp -- exception types shared across the engine.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubaut {

// Thrown when a coset or witness enumeration would exceed its element cap.
// Carries the enumeration that blew up and how many elements were produced
// before aborting, so callers can report and re-run with a larger cap.
class EnumerationTooLarge : public std::runtime_error {
public:
    EnumerationTooLarge(std::string scope, std::size_t partial_count, std::size_t cap)
        : std::runtime_error("enumeration too large: " + scope + " exceeded cap " +
                             std::to_string(cap) + " (produced " +
                             std::to_string(partial_count) + ")"),
          scope_(std::move(scope)),
          partial_count_(partial_count),
          cap_(cap) {}

    const std::string& scope() const { return scope_; }
    std::size_t partial_count() const { return partial_count_; }
    std::size_t cap() const { return cap_; }

private:
    std::string scope_;
    std::size_t partial_count_;
    std::size_t cap_;
};

}  // namespace schubaut
