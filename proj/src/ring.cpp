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

#include "gencirc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "gencirc/errors.hpp"

namespace gencirc {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  for (auto e : exponents_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) throw std::invalid_argument("monomial dimension mismatch");
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
  std::vector<std::uint32_t> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exponents_[i];
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial dimension mismatch");
  std::vector<std::uint32_t> e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents_[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial dimension mismatch");
  std::vector<std::uint32_t> e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exponents_[i] != 0 && b.exponents_[i] != 0) return false;
  return true;
}

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial dimension mismatch");
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void fill_monomials(std::vector<std::uint32_t>& e, std::size_t index, std::uint32_t remaining,
                    std::vector<Monomial>& out) {
  if (index + 1 == e.size()) {
    e[index] = remaining;
    out.emplace_back(e);
    return;
  }
  for (std::uint32_t k = remaining + 1; k-- > 0;) {
    e[index] = k;
    fill_monomials(e, index + 1, remaining - k, out);
  }
}

bool monomial_greater(const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) > 0; }

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t degree) {
  if (nvars == 0) throw std::invalid_argument("ring needs at least one variable");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  fill_monomials(e, 0, degree, out);
  std::sort(out.begin(), out.end(), monomial_greater);
  return out;
}

// ---------------------------------------------------------------------------
// PolyRing

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> names, FieldSpec field)
    : names_(std::move(names)), field_(field) {
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw std::invalid_argument("bad variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

RingPtr PolyRing::make(std::vector<std::string> names, FieldSpec field) {
  return std::make_shared<const PolyRing>(std::move(names), field);
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr PolyRing::with_variable_appended(const std::string& preferred) const {
  std::string name = preferred;
  while (index_of(name)) name += "_";
  auto names = names_;
  names.push_back(name);
  return make(std::move(names), field_);
}

RingPtr PolyRing::over(const FieldSpec& field) const { return make(names_, field); }

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  for (const auto& t : terms) {
    if (t.monomial.size() != p.ring_->nvars()) throw std::invalid_argument("monomial dimension mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return monomial_greater(a.monomial, b.monomial); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coefficient.is_zero(); });
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  auto n = ring->nvars();
  return term(std::move(ring), Monomial::one(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto n = ring->nvars();
  auto one = Scalar::one(ring->field());
  return term(std::move(ring), Monomial::variable(n, index), one);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Scalar c) {
  std::vector<Term> t;
  t.push_back(Term{std::move(m), std::move(c)});
  return from_terms(std::move(ring), std::move(t));
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.monomial);
  return s;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Scalar::zero(ring_->field());
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

std::uint32_t Polynomial::degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
  return terms_.front().monomial.degree();
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) throw std::invalid_argument("ring mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) {
      c = std::strong_ordering::less;
    } else if (j == b.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = degrevlex_compare(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(subtract ? Term{b[j].monomial, -b[j].coefficient} : b[j]);
      ++j;
    } else {
      Scalar s = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!s.is_zero()) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_ring(rhs);
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back(Term{s.monomial * t.monomial, s.coefficient * t.coefficient});
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // degrevlex is multiplicative, so the product stays sorted
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || !(a.terms_[i].coefficient == b.terms_[i].coefficient))
      return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const bool rational = !ring_->field().is_prime();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool negative = rational && sgn(t.coefficient.to_rational()) < 0;
    Scalar magnitude = negative ? -t.coefficient : t.coefficient;
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const bool constant = t.monomial.degree() == 0;
    if (constant) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + '*';
      out += ring_->monomial_to_string(t.monomial);
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = text_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_space();
      Term t = parse_term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      first = false;
      skip_space();
      if (at_end()) break;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Term parse_term() {
    const auto& field = ring_->field();
    std::vector<std::uint32_t> exps(ring_->nvars(), 0);
    Scalar coeff = Scalar::one(field);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpq_class value{mpz_class(digits())};
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        mpz_class den(digits());
        if (den == 0) fail("zero denominator");
        value /= den;
      }
      try {
        coeff = Scalar(value, field);
      } catch (const std::domain_error&) {
        fail("coefficient denominator vanishes in " + field.to_string());
      }
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      } else {
        need_factor = false;
      }
    }
    while (need_factor) {
      parse_factor(exps);
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      skip_space();
    }
    return Term{Monomial(std::move(exps)), coeff};
  }

  void parse_factor(std::vector<std::uint32_t>& exps) {
    std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    auto name = text_.substr(start, pos_ - start);
    auto index = ring_->index_of(name);
    if (!index) fail("unknown variable '" + std::string(name) + "'");
    skip_space();
    std::uint32_t power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_space();
      auto d = digits();
      if (d.size() > 6) fail("exponent too large");
      power = static_cast<std::uint32_t>(std::stoul(d));
    }
    exps[*index] += power;
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return PolynomialParser(std::move(ring), text).parse();
}

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(std::vector<long> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("empty weight vector");
}

Weight Weight::from_rationals(std::span<const mpq_class> entries) {
  mpz_class scale = 1;
  for (const auto& q : entries) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  std::vector<long> out;
  for (const auto& q : entries) {
    mpz_class v = q.get_num() * (scale / q.get_den());
    if (!v.fits_slong_p()) throw std::invalid_argument("weight entry too large");
    out.push_back(v.get_si());
  }
  return Weight(std::move(out));
}

Weight Weight::parse(std::string_view text) {
  std::vector<mpq_class> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string token;
    for (char c : text.substr(start, end - start))
      if (!std::isspace(static_cast<unsigned char>(c))) token.push_back(c);
    auto slash = token.find('/');
    auto valid_int = [](const std::string& s) {
      std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
    };
    bool ok = slash == std::string::npos
                  ? valid_int(token)
                  : valid_int(token.substr(0, slash)) && token.size() > slash + 1 &&
                        token.substr(slash + 1).find_first_not_of("0123456789") == std::string::npos;
    if (!ok) throw ParseError("bad weight entry '" + token + "' in '" + std::string(text) + "'");
    if (token[0] == '+') token.erase(0, 1);
    mpq_class q(token);
    if (q.get_den() == 0) throw ParseError("zero denominator in weight");
    q.canonicalize();
    entries.push_back(q);
    start = end + 1;
  }
  return from_rationals(entries);
}

bool Weight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](long v) { return v == 0; });
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

long weight_value(const Monomial& m, const Weight& w) {
  if (m.size() != w.size()) throw std::invalid_argument("weight dimension mismatch");
  long v = 0;
  for (std::size_t i = 0; i < m.size(); ++i) v += w[i] * static_cast<long>(m[i]);
  return v;
}

Polynomial initial_form_w(const Polynomial& f, const Weight& w) {
  if (f.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
  long best = weight_value(f.terms().front().monomial, w);
  for (const auto& t : f.terms()) best = std::max(best, weight_value(t.monomial, w));
  std::vector<Term> kept;
  for (const auto& t : f.terms())
    if (weight_value(t.monomial, w) == best) kept.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(kept));
}

Polynomial homogenize_w(const Polynomial& f, const Weight& w, RingPtr target) {
  const auto& ring = *f.ring();
  if (w.size() != ring.nvars()) throw std::invalid_argument("weight dimension mismatch");
  if (!target) target = ring.with_variable_appended("t");
  if (target->nvars() != ring.nvars() + 1) throw std::invalid_argument("homogenizing ring must add one variable");
  if (f.is_zero()) return Polynomial(target);
  long top = weight_value(f.terms().front().monomial, w);
  for (const auto& t : f.terms()) top = std::max(top, weight_value(t.monomial, w));
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    auto e = std::vector<std::uint32_t>(t.monomial.exponents().begin(), t.monomial.exponents().end());
    e.push_back(static_cast<std::uint32_t>(top - weight_value(t.monomial, w)));
    out.push_back(Term{Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(std::move(target), std::move(out));
}

Polynomial specialize_variable(const Polynomial& f, std::size_t index, const Scalar& value,
                               const RingPtr& target) {
  const auto n = f.ring()->nvars();
  if (index >= n || target->nvars() + 1 != n) throw std::invalid_argument("specialization ring mismatch");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e;
    for (std::size_t i = 0; i < n; ++i)
      if (i != index) e.push_back(t.monomial[i]);
    out.push_back(Term{Monomial(std::move(e)), t.coefficient * value.pow(t.monomial[index])});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Substitution

Substitution::Substitution(RingPtr ring, Matrix matrix, Action action)
    : ring_(std::move(ring)), matrix_(std::move(matrix)), action_(action) {
  const auto n = ring_->nvars();
  if (matrix_.rows() != n || matrix_.cols() != n) throw std::invalid_argument("substitution matrix must be n x n");
  if (!(matrix_.field() == ring_->field())) throw std::invalid_argument("substitution matrix over the wrong field");
  if (rank(matrix_) != n) throw std::invalid_argument("substitution matrix is singular");
}

Substitution Substitution::diagonal_scaling(RingPtr ring, const Weight& w, const Scalar& a) {
  if (w.size() != ring->nvars()) throw std::invalid_argument("weight dimension mismatch");
  if (a.is_zero()) throw std::invalid_argument("diagonal scaling needs a nonzero parameter");
  Matrix m(ring->nvars(), ring->nvars(), ring->field());
  for (std::size_t i = 0; i < w.size(); ++i) m.at(i, i) = a.pow(-w[i]);
  return Substitution(std::move(ring), std::move(m), Action::row);
}

Substitution Substitution::relabeling(RingPtr ring, std::span<const std::size_t> perm) {
  const auto n = ring->nvars();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  Matrix m(n, n, ring->field());
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] >= n) throw std::invalid_argument("permutation entry out of range");
    m.at(perm[k], k) = Scalar::one(ring->field());
  }
  return Substitution(std::move(ring), std::move(m), Action::row);
}

Substitution Substitution::inverse() const {
  auto inv = gencirc::inverse(matrix_);
  return Substitution(ring_, std::move(*inv), action_);
}

Polynomial Substitution::image_of_variable(std::size_t index) const {
  const auto n = ring_->nvars();
  std::vector<Term> terms;
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar& c = action_ == Action::row ? matrix_.at(index, k) : matrix_.at(k, index);
    terms.push_back(Term{Monomial::variable(n, k), c});
  }
  return Polynomial::from_terms(ring_, std::move(terms));
}

Polynomial Substitution::apply(const Polynomial& f) const {
  if (!(*f.ring() == *ring_)) throw std::invalid_argument("substitution applied to a polynomial of another ring");
  const auto n = ring_->nvars();
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].push_back(Polynomial::constant(ring_, Scalar::one(ring_->field())));
    powers[i].push_back(image_of_variable(i));
  }
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * powers[i][1]);
    return powers[i][e];
  };
  Polynomial result(ring_);
  for (const auto& t : f.terms()) {
    Polynomial p = Polynomial::constant(ring_, t.coefficient);
    for (std::size_t i = 0; i < n; ++i)
      if (t.monomial[i] > 0) p = p * power(i, t.monomial[i]);
    result += p;
  }
  return result;
}

}  // namespace gencirc
