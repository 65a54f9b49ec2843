// Copyright 2026 The Braket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRAKET_SERIALIZE_H
#define BRAKET_SERIALIZE_H

#include <nlohmann/json.hpp>

#include "braket/operators.h"
#include "braket/quantum.h"
#include "braket/spaces.h"
#include "braket/tensor.h"

namespace braket {

// JSON layouts:
//   complex        [re, im]
//   SpaceLabel     {"dim": n, "conj": bool}
//   Ket            {"space": SpaceLabel, "coords": [[re, im], ...]}
//   Operator       {"domain": SpaceLabel, "codomain": SpaceLabel, "rows": [[[re, im], ...], ...]}
//   TensorElement  {"factors": [m, n], "coords": [[re, im], ...]}
//
// Doubles are written with round-trip precision, so parsing gives back the
// exact values.

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const SpaceLabel &s);
nlohmann::json to_json(const Ket &k);
nlohmann::json to_json(const Operator &a);
nlohmann::json to_json(const TensorElement &t);
nlohmann::json to_json(const Measurement &m);
nlohmann::json to_json(const TeleportTrace &trace);

Complex complex_from_json(const nlohmann::json &j);
SpaceLabel space_from_json(const nlohmann::json &j);
Ket ket_from_json(const nlohmann::json &j);
Operator operator_from_json(const nlohmann::json &j);
TensorElement tensor_from_json(const nlohmann::json &j);

}  // namespace braket

#endif
