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

#ifndef BRAKET_ERRORS_H
#define BRAKET_ERRORS_H

#include <stdexcept>
#include <string>

namespace braket {

/// Two objects live in different spaces (dimension or conjugation flag differ).
class SpaceMismatchError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was applied under the wrong inner-product convention, e.g. the
/// conjugate scalar action on a plain-space ket.
class ConventionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace braket

#endif
