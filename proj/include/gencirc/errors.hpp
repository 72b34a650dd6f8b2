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

#include <stdexcept>
#include <string>

namespace gencirc {

/// Malformed textual input: polynomial strings, ideal files, order or weight syntax.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A randomized or bounded procedure could not certify its answer. `reason()` is a
/// short machine-readable tag ("uncertified", "lexseg-cap", "enumeration-truncated").
class CertificationFailure : public std::runtime_error {
 public:
  CertificationFailure(std::string reason, const std::string& what)
      : std::runtime_error(what), reason_(std::move(reason)) {}
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

}  // namespace gencirc
