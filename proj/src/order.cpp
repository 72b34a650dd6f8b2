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

#include "gencirc/order.hpp"

#include <stdexcept>

#include "gencirc/errors.hpp"

namespace gencirc {

MonomialOrder MonomialOrder::weighted(Weight w, const MonomialOrder& tie) {
  if (tie.kind_ == Kind::weighted && *tie.weight_ == w) {
    throw std::invalid_argument("weight order refined by the same weight");
  }
  MonomialOrder o(Kind::weighted);
  o.weight_ = std::move(w);
  o.tie_ = std::make_shared<const MonomialOrder>(tie);
  return o;
}

MonomialOrder MonomialOrder::parse(std::string_view raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ' && c != '\t') text.push_back(c);
  if (text == "lex") return lex();
  if (text == "drl" || text == "degrevlex" || text == "grevlex") return degrevlex();
  if (text.rfind("w:", 0) == 0) {
    auto semi = text.find(';');
    std::string weight_text = text.substr(2, semi == std::string::npos ? std::string::npos : semi - 2);
    MonomialOrder tie = degrevlex();
    if (semi != std::string::npos) {
      std::string rest = text.substr(semi + 1);
      if (rest.rfind("tie=", 0) != 0) throw ParseError("expected 'tie=' in order '" + std::string(raw) + "'");
      tie = parse(rest.substr(4));
    }
    try {
      return weighted(Weight::parse(weight_text), tie);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown monomial order '" + std::string(raw) + "'");
}

const Weight& MonomialOrder::weight() const {
  if (kind_ != Kind::weighted) throw std::logic_error("order has no weight");
  return *weight_;
}

const MonomialOrder& MonomialOrder::tie() const {
  if (kind_ != Kind::weighted) throw std::logic_error("order has no tie order");
  return *tie_;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("monomial dimension mismatch");
  switch (kind_) {
    case Kind::lex:
      return a <=> b;
    case Kind::degrevlex:
      return degrevlex_compare(a, b);
    case Kind::weighted: {
      long wa = weight_value(a, *weight_);
      long wb = weight_value(b, *weight_);
      if (wa != wb) return wa <=> wb;
      return tie_->compare(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::lex:
      return "lex";
    case Kind::degrevlex:
      return "drl";
    case Kind::weighted:
      return "w:" + weight_->to_string() + ";tie=" + tie_->to_string();
  }
  return {};
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != MonomialOrder::Kind::weighted) return true;
  return *a.weight_ == *b.weight_ && *a.tie_ == *b.tie_;
}

Term leading_term(const Polynomial& f, const MonomialOrder& o) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (o.greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

}  // namespace gencirc
