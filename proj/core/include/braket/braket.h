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

#ifndef BRAKET_BRAKET_H
#define BRAKET_BRAKET_H

#include "braket/errors.h"
#include "braket/hilbert_schmidt.h"
#include "braket/matrix.h"
#include "braket/operators.h"
#include "braket/quantum.h"
#include "braket/random.h"
#include "braket/serialize.h"
#include "braket/spaces.h"
#include "braket/tensor.h"

#endif
