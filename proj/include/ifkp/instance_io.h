// Copyright 2026 The ifkp Authors
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

// JSON instance documents:
//
//   {"b": 25, "x_star": [1, 1, 0, 1, 0],
//    "items": [{"p": 8, "c": 5, "u_bar": 3, "v_bar": 0, "lambda_bar": 0,
//               "mu_bar": 0, "w": "3", "w_cost": "0"}, ...]}
//
// Rationals are "num/den" strings or bare integers. Bounds default to 0 and
// weights to 1 when omitted. A document without "x_star" is a bare forward
// instance and may only carry "p" and "c" per item. Unknown keys are errors.

#ifndef IFKP_INSTANCE_IO_H_
#define IFKP_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "ifkp/types.h"

namespace ifkp {

struct InstanceDocument {
  FkpInstance base;
  std::optional<InverseInstance> inverse;
};

// Throws kParseError (with line or field context) or kInvariantViolation.
InstanceDocument ParseDocument(std::string_view text);

// As ParseDocument, but the inverse fields are required. norm is kL1.
InverseInstance ParseInstance(std::string_view text);

std::string SerializeInstance(const InverseInstance& inv);
std::string SerializeFkpInstance(const FkpInstance& inst);

// Throws kIoError.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace ifkp

#endif  // IFKP_INSTANCE_IO_H_
