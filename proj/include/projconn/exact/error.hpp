#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace projconn {

// Every domain-level failure carries a stable machine-readable condition slug
// (e.g. "element-at-infinity", "w1=w2") next to the human-readable message.
// The CLI surfaces the slug in structured error documents; tests match on it.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string condition, const std::string& message)
        : std::runtime_error(message), condition_(std::move(condition)) {}

    explicit DomainError(const std::string& condition)
        : std::runtime_error(condition), condition_(condition) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

// Structural misuse (non-square matrix, mismatched variable lists, malformed
// rational literal).  Distinct from DomainError: these are caller bugs or bad
// input syntax, not legitimate degenerate configurations.
class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace projconn
