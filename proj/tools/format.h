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

#ifndef BRAKET_TOOLS_FORMAT_H
#define BRAKET_TOOLS_FORMAT_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braket/matrix.h"

namespace braket::cli {

/// Parses `re`, `imi` or `re+imi` / `re-imi` (e.g. "0.6+0.8i", "-i", "2.5e-3").
/// Throws std::invalid_argument on anything else.
Complex parse_complex(std::string_view text);

/// Comma-separated complex literals: "1,0.5i,2-3i".
std::vector<Complex> parse_complex_list(std::string_view text);

/// Shortest round-trip form: "0", "-1.5", "0.5i", "0.6+0.8i".
std::string format_complex(Complex z);

/// "(a, b, c)"
std::string format_vector(std::span<const Complex> v);

std::string format_double(double x);

}  // namespace braket::cli

#endif
