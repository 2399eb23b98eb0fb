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

// JSON encodings of functions, families and reports.
//
//   {"n": 3, "entries": [{"set": [1, 2], "value": 1.0}, ...]}
//   {"n": 6, "members": [[1, 2, 3], [4, 5, 6], ...]}
//
// Subsets omitted from "entries" are NEG_INF; a value may also be the
// string "-inf". Reports carry no timing so their encoding is reproducible.

#ifndef DCA_JSON_IO_H_
#define DCA_JSON_IO_H_

#include <string>

#include "dca/axioms.h"
#include "dca/core.h"
#include "dca/duality.h"
#include "dca/suite.h"
#include "json.hpp"

namespace dca {

using Json = nlohmann::ordered_json;

// Throws kParse on malformed input, duplicate subsets, repeated or
// out-of-range elements, or n < 1.
SetFunction SetFunctionFromJson(const Json& j);
SetFamily SetFamilyFromJson(const Json& j);

// Finite entries only, in increasing bit order.
Json ToJson(const SetFunction& f);
Json ToJson(const SetFamily& family);
Json ToJson(const Witness& w);
Json ToJson(const CheckReport& report);
Json ToJson(const SuiteSummary& summary);
Json ToJson(const LemmaReport& report);
Json ToJson(const SubmodularityReport& report);

// Parses a file or "-" for stdin. Throws kIo or kParse.
Json LoadJsonFile(const std::string& path);

}  // namespace dca

#endif  // DCA_JSON_IO_H_
