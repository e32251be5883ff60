#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vfl {

// Byte range into the source text a diagnostic refers to.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive; begin <= end

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
  public:
    enum class Code {
        UnexpectedToken,
        UnexpectedEnd,
        UnknownSymbol,      // wrong symbol class for the position, or not lexable
        ArityMismatch,
        BodyCopiesDiffer,   // the two written copies of an ellipsis body disagree
        MalformedEllipsis,  // marker without a variable, or missing (0) wrapper
        BadQuantifier,
        BadNumeral,
    };

    ParseError(Code code, SourceSpan span, const std::string& message)
        : std::runtime_error(message), code_(code), span_(span) {}

    Code code() const { return code_; }
    SourceSpan span() const { return span_; }

  private:
    Code code_;
    SourceSpan span_;
};

// Evaluation ran into a budget limit (ellipsis width or step count).
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A host function asked for data outside the known finite prefix of an
// infinite object. Satisfaction treats the affected atom as unknown.
class OutOfPrefix : public std::runtime_error {
  public:
    OutOfPrefix() : std::runtime_error("probe outside the stored prefix") {}
    using std::runtime_error::runtime_error;
};

// Ill-formed input to evaluation: missing interpretation, undeclared symbol,
// arity mismatch discovered at runtime.
class EvalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace vfl
