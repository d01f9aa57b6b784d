#pragma once

#include <stdexcept>
#include <string>

namespace lgcy {

enum class ErrorCode {
    NotQuasihomogeneous,
    NonPositiveCharge,
    NotInvertible,
    NotNondegenerate,
    InfiniteGroup,
    JNotInGroup,
    GroupTooLarge,
    NonPolynomialQuotient,
    NonIntegerDimension,
    InstanceTooLarge,
    NotApplicable,
    MatchingImpossible,
    CrossCheckFailure,
    SyntaxError,
    DuplicateMonomial,
    UnknownVariable,
    JNotContained,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lgcy
