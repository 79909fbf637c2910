// Copyright 2026 The darboux authors
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

#pragma once

#include <string_view>

#include "darboux/field.hpp"
#include "darboux/poly.hpp"

namespace darboux {

/// Parses a vector field from the text grammar
///
///   [ param a = <rat>; ] [ param b = <rat>; ]
///   dx = <expr>; dy = <expr>; dz = <expr>;
///
/// where expressions use +, -, *, ^, integer or p/q literals, the variables
/// x, y, z, the parameters a, b, and parentheses. Division only appears
/// inside rational literals; dividing by a variable is a parse error.
/// `param` lines pre-specialize the corresponding symbol.
Field parse_field(std::string_view text);

/// Parses a single polynomial expression over the same grammar.
Poly parse_polynomial(std::string_view text);

}  // namespace darboux
