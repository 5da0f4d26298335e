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


#ifndef MATEXT_LP_IO_H_
#define MATEXT_LP_IO_H_

#include <string>

#include "matext/lp.h"

namespace matext {

// JSON encodings with exact fractions as "p/q" strings. Variables are
// subset masks plus extra ids as in PolymatroidLP; row indices in
// multipliers are global (elemental block first). Parsers throw
// std::invalid_argument on malformed input.
std::string LPToJson(const PolymatroidLP& lp);
PolymatroidLP LPFromJson(const std::string& text);

std::string OutcomeToJson(const LPOutcome& outcome);
LPOutcome OutcomeFromJson(const std::string& text);

// 64-bit FNV-1a digest as 16 hex digits, used to name certificate files.
std::string ContentHash(const std::string& text);

}  // namespace matext

#endif  // MATEXT_LP_IO_H_
