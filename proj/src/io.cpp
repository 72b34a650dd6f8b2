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

#include "gencirc/io.hpp"

#include <fstream>
#include <sstream>

#include "gencirc/errors.hpp"

namespace gencirc {

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

Ideal parse_ideal(std::string_view text, const std::optional<FieldSpec>& field) {
  std::optional<FieldSpec> declared;
  std::optional<std::vector<std::string>> vars;
  std::vector<std::string> gen_lines;
  bool in_gens = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (in_gens) {
      gen_lines.push_back(line);
      continue;
    }
    for (const auto& part : split(line, ';')) {
      if (part.empty()) continue;
      auto colon = part.find(':');
      if (colon == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected `key: value`");
      auto key = trim(part.substr(0, colon));
      auto value = trim(part.substr(colon + 1));
      if (key == "ring") {
        try {
          declared = FieldSpec::parse(value);
        } catch (const std::invalid_argument& e) {
          throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
      } else if (key == "vars") {
        vars = split(value, ',');
      } else if (key == "gens") {
        in_gens = true;
        if (!value.empty()) gen_lines.push_back(value);
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown key `" + key + "`");
      }
    }
  }
  if (!declared) throw ParseError("missing `ring:` header");
  if (!vars) throw ParseError("missing `vars:` header");
  if (!in_gens) throw ParseError("missing `gens:` section");
  RingPtr ring;
  try {
    ring = PolyRing::make(*vars, field.value_or(*declared));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::vector<Polynomial> gens;
  for (const auto& g : gen_lines) gens.push_back(Polynomial::parse(ring, g));
  try {
    return Ideal(ring, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Ideal read_ideal_file(const std::string& path, const std::optional<FieldSpec>& field) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal(buffer.str(), field);
}

std::string format_ideal(const Ideal& ideal) {
  const auto& ring = *ideal.ring();
  std::string out = "ring: " + ring.field().to_string() + "; vars: ";
  for (std::size_t i = 0; i < ring.nvars(); ++i) out += (i ? "," : "") + ring.names()[i];
  out += "\ngens:\n";
  for (const auto& g : ideal.generators()) out += g.to_string() + "\n";
  return out;
}

}  // namespace gencirc
