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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gencirc/groebner.hpp"

namespace gencirc {

/// Ideal file:
///
///   ring: Q; vars: x,y,z      (or GF(p); the two keys may also sit on separate lines)
///   gens:
///   x^2 + y*z
///   x*y
///
/// Blank lines and text after `#` are ignored. `field` overrides the declared ring.
/// Throws ParseError on malformed input.
Ideal parse_ideal(std::string_view text, const std::optional<FieldSpec>& field = std::nullopt);

Ideal read_ideal_file(const std::string& path, const std::optional<FieldSpec>& field = std::nullopt);

/// Inverse of parse_ideal for the generators as stored.
std::string format_ideal(const Ideal& ideal);

}  // namespace gencirc
