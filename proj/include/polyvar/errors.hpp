#pragma once

#include <stdexcept>
#include <string>

namespace polyvar {

// All toolkit errors carry a stable machine-readable code, surfaced verbatim
// in CLI reports and mapped to exit codes there.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error("dimension-mismatch", w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse-error", w) {}
};
struct RetriesExhausted : Error {
    explicit RetriesExhausted(const std::string& w) : Error("retries-exhausted", w) {}
};
struct DegreeBudgetExceeded : Error {
    explicit DegreeBudgetExceeded(const std::string& w) : Error("degree-budget-exceeded", w) {}
};
struct NotStabilized : Error {
    explicit NotStabilized(const std::string& w) : Error("not-stabilized", w) {}
};
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& w) : Error("precondition-violated", w) {}
};
struct DecompositionIncomplete : Error {
    explicit DecompositionIncomplete(const std::string& w) : Error("decomposition-incomplete", w) {}
};
struct HamSandwichNotFound : Error {
    explicit HamSandwichNotFound(const std::string& w) : Error("ham-sandwich-not-found", w) {}
};
struct RoundBudgetExceeded : Error {
    explicit RoundBudgetExceeded(const std::string& w) : Error("round-budget-exceeded", w) {}
};
struct RecursionBudgetExceeded : Error {
    explicit RecursionBudgetExceeded(const std::string& w) : Error("recursion-budget-exceeded", w) {}
};
struct NotFound : Error {
    explicit NotFound(const std::string& w) : Error("not-found", w) {}
};
struct MissingPointOracle : Error {
    explicit MissingPointOracle(const std::string& w) : Error("missing-point-oracle", w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error("domain-error", w) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("budget-exceeded", w) {}
};
struct GenericityExhausted : Error {
    explicit GenericityExhausted(const std::string& w) : Error("genericity-exhausted", w) {}
};
struct OracleMissing : Error {
    explicit OracleMissing(const std::string& w) : Error("oracle-missing", w) {}
};
struct FixtureFailure : Error {
    explicit FixtureFailure(const std::string& w) : Error("fixture-failure", w) {}
};

}  // namespace polyvar
