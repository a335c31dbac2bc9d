#ifndef HOCHHOM_ERRORS_HPP
#define HOCHHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hochhom {

enum class ErrorKind {
    DimensionMismatch,
    BudgetExceeded,
    TruncationTooShallow,
    NotASubcomplex,
    CompositionNonzero,
    HypothesisViolation,
    InvalidArgument,
    Parse,
};

/// All library failures are reported through this exception; `kind` is the
/// machine-readable part (the CLI maps kinds to exit statuses).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DimensionMismatch: return "dimension-mismatch";
        case ErrorKind::BudgetExceeded: return "budget-exceeded";
        case ErrorKind::TruncationTooShallow: return "truncation-too-shallow";
        case ErrorKind::NotASubcomplex: return "not-a-subcomplex";
        case ErrorKind::CompositionNonzero: return "composition-nonzero";
        case ErrorKind::HypothesisViolation: return "hypothesis-violation";
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

} // namespace hochhom

#endif
