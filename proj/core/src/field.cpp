// Copyright 2026 The jetsolve Authors.
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

#include "jetsolve/field.hpp"

#include <cctype>

#include "jetsolve/error.hpp"

namespace jetsolve {

namespace {

constexpr std::uint32_t kMaxModulus = 0x7fffffffu;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return result;
}

}  // namespace

std::string to_string(const FieldSpec& spec) {
  if (spec.kind == FieldKind::Rational) return "Q";
  return "Fp " + std::to_string(spec.modulus);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string FieldValue::to_string() const {
  if (is_residue()) return std::to_string(residue());
  return rational().get_str();
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  if (a.is_residue() != b.is_residue()) return false;
  if (a.is_residue()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::PrimeField) {
    if (spec_.modulus > kMaxModulus || !is_prime(spec_.modulus)) {
      throw NonPrimeModulus("modulus " + std::to_string(spec_.modulus) +
                            " is not a prime below 2^31");
    }
  } else {
    spec_.modulus = 0;
  }
}

std::uint32_t Field::reduce(long long v) const {
  long long r = v % static_cast<long long>(spec_.modulus);
  if (r < 0) r += spec_.modulus;
  return static_cast<std::uint32_t>(r);
}

FieldValue Field::zero() const { return from_int(0); }
FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(long long v) const {
  if (is_finite()) return FieldValue::residue(reduce(v));
  return FieldValue::rational(mpq_class(mpz_class(std::to_string(v))));
}

FieldValue Field::from_integer(const mpz_class& v) const {
  if (is_finite()) {
    mpz_class r = v % spec_.modulus;
    if (r < 0) r += spec_.modulus;
    return FieldValue::residue(static_cast<std::uint32_t>(r.get_ui()));
  }
  return FieldValue::rational(mpq_class(v));
}

FieldValue Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (is_finite()) return div(from_integer(num), from_integer(den));
  if (den == 0) throw DivisionByZero("zero denominator");
  return FieldValue::rational(mpq_class(num, den));
}

FieldValue Field::parse(std::string_view text) const {
  auto parse_int = [&](std::string_view s) -> mpz_class {
    std::string digits(s);
    bool ok = !digits.empty();
    std::size_t start = (ok && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size()) ok = false;
    for (std::size_t i = start; ok && i < digits.size(); ++i) {
      ok = std::isdigit(static_cast<unsigned char>(digits[i])) != 0;
    }
    if (!ok) throw SemanticError("malformed field literal '" + std::string(text) + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    return mpz_class(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_integer(parse_int(text));
  return from_fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

void Field::check(const FieldValue& a) const {
  if (is_finite()) {
    if (!a.is_residue() || a.residue() >= spec_.modulus) {
      throw FieldMismatch("value " + a.to_string() + " is not an element of " +
                          jetsolve::to_string(spec_));
    }
  } else if (a.is_residue()) {
    throw FieldMismatch("residue " + a.to_string() + " used as a rational");
  }
}

FieldValue Field::add(const FieldValue& a, const FieldValue& b) const {
  check(a);
  check(b);
  if (is_finite()) {
    std::uint64_t s = std::uint64_t{a.residue()} + b.residue();
    return FieldValue::residue(static_cast<std::uint32_t>(s % spec_.modulus));
  }
  return FieldValue::rational(a.rational() + b.rational());
}

FieldValue Field::sub(const FieldValue& a, const FieldValue& b) const {
  return add(a, neg(b));
}

FieldValue Field::mul(const FieldValue& a, const FieldValue& b) const {
  check(a);
  check(b);
  if (is_finite()) {
    std::uint64_t s = std::uint64_t{a.residue()} * b.residue();
    return FieldValue::residue(static_cast<std::uint32_t>(s % spec_.modulus));
  }
  return FieldValue::rational(a.rational() * b.rational());
}

FieldValue Field::neg(const FieldValue& a) const {
  check(a);
  if (is_finite()) {
    return FieldValue::residue(a.residue() == 0 ? 0 : spec_.modulus - a.residue());
  }
  return FieldValue::rational(-a.rational());
}

FieldValue Field::inv(const FieldValue& a) const {
  check(a);
  if (is_zero(a)) throw DivisionByZero("inverse of zero");
  if (is_finite()) {
    // Fermat: a^(p-2) is the inverse of a nonzero residue.
    return FieldValue::residue(
        static_cast<std::uint32_t>(mod_pow(a.residue(), spec_.modulus - 2, spec_.modulus)));
  }
  return FieldValue::rational(1 / a.rational());
}

FieldValue Field::div(const FieldValue& a, const FieldValue& b) const {
  return mul(a, inv(b));
}

FieldValue Field::pow(const FieldValue& a, std::uint64_t e) const {
  check(a);
  if (is_finite()) {
    return FieldValue::residue(
        static_cast<std::uint32_t>(mod_pow(a.residue(), e, spec_.modulus)));
  }
  mpq_class result(1);
  mpq_class base = a.rational();
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return FieldValue::rational(std::move(result));
}

bool Field::is_zero(const FieldValue& a) const {
  if (a.is_residue()) return a.residue() == 0;
  return a.rational() == 0;
}

bool Field::is_one(const FieldValue& a) const {
  if (a.is_residue()) return a.residue() == 1;
  return a.rational() == 1;
}

FieldValue Field::normalize(const FieldValue& a) const {
  if (is_finite()) {
    if (a.is_residue()) return FieldValue::residue(a.residue() % spec_.modulus);
    return from_fraction(a.rational().get_num(), a.rational().get_den());
  }
  if (a.is_residue()) return from_int(a.residue());
  return FieldValue::rational(a.rational());
}

std::vector<FieldValue> Field::elements() const {
  if (!is_finite()) throw NotEnumerable("the rational field cannot be enumerated");
  std::vector<FieldValue> out;
  out.reserve(spec_.modulus);
  for (std::uint32_t r = 0; r < spec_.modulus; ++r) out.push_back(FieldValue::residue(r));
  return out;
}

}  // namespace jetsolve
