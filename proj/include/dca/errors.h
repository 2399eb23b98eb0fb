// Copyright 2026 The Authors.
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

#ifndef DCA_ERRORS_H_
#define DCA_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dca {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kEmptyDomain,
  kEmptyFamily,
  kLiftTooSmall,
  kCapExceeded,
  kCorpusTooLarge,
  kParse,
  kIo,
  kNotABaseFamily,
  kNotConcaveSequence,
  kHypothesisViolated,
  kInternalContradiction,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// distinguishes input errors from resource caps.
class DcaError : public std::runtime_error {
 public:
  DcaError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dca

#endif  // DCA_ERRORS_H_
