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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace jetsolve {

enum class FieldKind { Rational, PrimeField };

/// Which coefficient field a computation runs over. Prime moduli are
/// limited to p < 2^31 so residue products fit in 64 bits.
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t modulus = 0;

  static FieldSpec rational() { return {FieldKind::Rational, 0}; }
  static FieldSpec prime(std::uint32_t p) { return {FieldKind::PrimeField, p}; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// "Q" or "Fp 5".
std::string to_string(const FieldSpec& spec);

/// Trial division; exact for every 32-bit input.
bool is_prime(std::uint32_t n);

/// An exact scalar: a residue in [0, p) or a rational in lowest terms.
///
/// Values do not know their modulus; arithmetic goes through a Field, which
/// validates that operands belong to it.
class FieldValue {
 public:
  FieldValue() : rep_(std::uint32_t{0}) {}

  static FieldValue residue(std::uint32_t r) { return FieldValue(r); }
  static FieldValue rational(mpq_class q) {
    q.canonicalize();
    return FieldValue(std::move(q));
  }

  bool is_residue() const { return std::holds_alternative<std::uint32_t>(rep_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

  /// Integers print bare, fractions as "a/b".
  std::string to_string() const;

  friend bool operator==(const FieldValue& a, const FieldValue& b);

 private:
  explicit FieldValue(std::uint32_t r) : rep_(r) {}
  explicit FieldValue(mpq_class q) : rep_(std::move(q)) {}

  std::variant<std::uint32_t, mpq_class> rep_;
};

class Field {
 public:
  /// Throws NonPrimeModulus for a composite (or out-of-range) modulus.
  explicit Field(FieldSpec spec);

  static Field rational() { return Field(FieldSpec::rational()); }
  static Field prime(std::uint32_t p) { return Field(FieldSpec::prime(p)); }

  const FieldSpec& spec() const { return spec_; }
  bool is_finite() const { return spec_.kind == FieldKind::PrimeField; }
  std::uint32_t modulus() const { return spec_.modulus; }
  std::uint32_t characteristic() const { return is_finite() ? spec_.modulus : 0; }

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(long long v) const;
  FieldValue from_integer(const mpz_class& v) const;
  /// num/den; throws DivisionByZero when den == 0 (or den ≡ 0 mod p).
  FieldValue from_fraction(const mpz_class& num, const mpz_class& den) const;
  /// Integer or "a/b" literal, optional leading sign.
  FieldValue parse(std::string_view text) const;

  FieldValue add(const FieldValue& a, const FieldValue& b) const;
  FieldValue sub(const FieldValue& a, const FieldValue& b) const;
  FieldValue mul(const FieldValue& a, const FieldValue& b) const;
  FieldValue neg(const FieldValue& a) const;
  FieldValue inv(const FieldValue& a) const;
  FieldValue div(const FieldValue& a, const FieldValue& b) const;
  FieldValue pow(const FieldValue& a, std::uint64_t e) const;

  bool is_zero(const FieldValue& a) const;
  bool is_one(const FieldValue& a) const;

  /// Re-canonicalizes a value; the identity on values produced by this field.
  FieldValue normalize(const FieldValue& a) const;

  /// Throws FieldMismatch unless `a` is a canonical element of this field.
  void check(const FieldValue& a) const;

  /// The p elements 0, 1, ..., p-1 in that order. Throws NotEnumerable over Q.
  std::vector<FieldValue> elements() const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  std::uint32_t reduce(long long v) const;

  FieldSpec spec_;
};

}  // namespace jetsolve
