// This file is part of relsc, a small-cancellation verification workbench.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "errors.hpp"

namespace relsc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::DuplicateFactorIndex: return "DuplicateFactorIndex";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::ZeroPower: return "ZeroPower";
    case ErrorCode::QuotientNotDecidable: return "QuotientNotDecidable";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::InfiniteFactorInBall: return "InfiniteFactorInBall";
    case ErrorCode::RadiusCapExceeded: return "RadiusCapExceeded";
    case ErrorCode::FactorMismatch: return "FactorMismatch";
    case ErrorCode::EmptySeed: return "EmptySeed";
    case ErrorCode::InfiniteBall: return "InfiniteBall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TrivialLetter: return "TrivialLetter";
    case ErrorCode::DuplicatePower: return "DuplicatePower";
    case ErrorCode::InvolutionLetter: return "InvolutionLetter";
    case ErrorCode::ForbiddenElement: return "ForbiddenElement";
    case ErrorCode::UnknownConstants: return "UnknownConstants";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::CorruptReport: return "CorruptReport";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace relsc
