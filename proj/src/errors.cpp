#include "lgcy/errors.hpp"

namespace lgcy {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotQuasihomogeneous: return "NotQuasihomogeneous";
    case ErrorCode::NonPositiveCharge: return "NonPositiveCharge";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotNondegenerate: return "NotNondegenerate";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::JNotInGroup: return "JNotInGroup";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NonPolynomialQuotient: return "NonPolynomialQuotient";
    case ErrorCode::NonIntegerDimension: return "NonIntegerDimension";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::MatchingImpossible: return "MatchingImpossible";
    case ErrorCode::CrossCheckFailure: return "CrossCheckFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::JNotContained: return "JNotContained";
    }
    return "Unknown";
}

}  // namespace lgcy
