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


#ifndef MATEXT_SEQUENCE_IO_H_
#define MATEXT_SEQUENCE_IO_H_

#include <string>
#include <vector>

#include "matext/ak.h"
#include "matext/matroid.h"

namespace matext {

// Names of the points of the extended ground set: matroid points are their
// decimal indices, auxiliary points use the step name or "z<i>".
std::vector<std::string> PointNames(const Matroid& m, const AKSequence& seq);
std::vector<std::string> PointNames(int n_points, const AKSequence& seq);

// Sequence files hold {"steps": [{"z": name, "kind": "AK"|"CI",
// "X": [names], "Y": [names]}, ...]}; a bare array of steps is accepted.
// Set members are point names or integer indices. Throws
// std::invalid_argument on unknown names or forward references.
AKSequence SequenceFromJson(const std::string& text, const Matroid& m);
AKSequence SequenceFromJson(const std::string& text, int n_points);
std::string SequenceToJson(const AKSequence& seq, const Matroid& m);
std::string SequenceToJson(const AKSequence& seq, int n_points);

// Set rendered with point names, e.g. "{2,5,8,alpha}".
std::string NamedSet(Mask a, const std::vector<std::string>& names);

}  // namespace matext

#endif  // MATEXT_SEQUENCE_IO_H_
