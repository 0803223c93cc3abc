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

#include "fairdiv/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace fairdiv {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr i128 kInt64Max = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a),
                      static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 value) {
  bool negative = value < 0;
  u128 magnitude = negative ? static_cast<u128>(-(value + 1)) + 1
                            : static_cast<u128>(value);
  mpz_class high(static_cast<unsigned long>(magnitude >> 64));
  mpz_class low(static_cast<unsigned long>(magnitude & ~std::uint64_t{0}));
  mpz_class result = (high << 64) + low;
  return negative ? mpz_class(-result) : result;
}

mpz_class to_mpz(std::int64_t value) { return to_mpz(static_cast<i128>(value)); }

bool fits_int64(const mpz_class& value) {
  return mpz_sizeinbase(value.get_mpz_t(), 2) <= 63;
}

std::int64_t mpz_to_int64(const mpz_class& value) {
  // Only called when fits_int64 holds, so the magnitude is below 2^63.
  mpz_class magnitude = abs(value);
  std::uint64_t low = 0;
  mpz_export(&low, nullptr, -1, sizeof(low), 0, 0, magnitude.get_mpz_t());
  auto result = static_cast<std::int64_t>(low);
  return sgn(value) < 0 ? -result : result;
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    assign_wide(value, 1);
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational: zero denominator");
  assign_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

void Rational::copy_big(const Rational& other) {
  big_ = std::make_unique<mpq_class>(*other.big_);
}

int Rational::big_sign() const { return sgn(*big_); }

void Rational::assign_wide(i128 numerator, i128 denominator) {
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  u128 magnitude = numerator < 0 ? static_cast<u128>(-numerator)
                                 : static_cast<u128>(numerator);
  u128 g = denominator == 1 ? 1 : gcd128(magnitude, static_cast<u128>(denominator));
  if (g > 1) {
    numerator /= static_cast<i128>(g);
    denominator /= static_cast<i128>(g);
  }
  if (numerator <= kInt64Max && numerator >= -kInt64Max &&
      denominator <= kInt64Max) {
    num_ = static_cast<std::int64_t>(numerator);
    den_ = static_cast<std::int64_t>(denominator);
    big_.reset();
    return;
  }
  mpq_class value(to_mpz(numerator), to_mpz(denominator));
  value.canonicalize();
  big_ = std::make_unique<mpq_class>(std::move(value));
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  if (fits_int64(value.get_num()) && fits_int64(value.get_den())) {
    num_ = mpz_to_int64(value.get_num());
    den_ = mpz_to_int64(value.get_den());
    big_.reset();
    return;
  }
  big_ = std::make_unique<mpq_class>(std::move(value));
}

mpq_class Rational::to_mpq() const {
  if (is_big()) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("invalid rational '" + std::string(text) +
                                 "'");
  };
  std::size_t slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      s.remove_prefix(1);
    }
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (!valid_integer(num_text, true) || !valid_integer(den_text, false)) {
    throw bad();
  }
  std::string num_str(num_text);
  if (!num_str.empty() && num_str[0] == '+') num_str.erase(0, 1);
  mpz_class num(num_str, 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw bad();
  Rational result;
  result.assign_big(mpq_class(num, den));
  return result;
}

std::string Rational::to_string() const {
  if (is_big()) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::numerator_string() const {
  return is_big() ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return is_big() ? big_->get_den().get_str() : std::to_string(den_);
}

bool Rational::is_integer() const {
  return is_big() ? big_->get_den() == 1 : den_ == 1;
}

Rational Rational::operator-() const {
  Rational result(*this);
  if (result.is_big()) {
    *result.big_ = -*result.big_;
  } else {
    result.num_ = -result.num_;
  }
  return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    std::int64_t sum = 0;
    if (den_ == 1 && rhs.den_ == 1 && !__builtin_add_overflow(num_, rhs.num_, &sum) &&
        sum != std::numeric_limits<std::int64_t>::min()) {
      num_ = sum;
      return *this;
    }
    if (den_ == rhs.den_) {
      assign_wide(static_cast<i128>(num_) + rhs.num_, den_);
    } else {
      assign_wide(static_cast<i128>(num_) * rhs.den_ +
                      static_cast<i128>(rhs.num_) * den_,
                  static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    std::int64_t difference = 0;
    if (den_ == 1 && rhs.den_ == 1 &&
        !__builtin_sub_overflow(num_, rhs.num_, &difference) &&
        difference != std::numeric_limits<std::int64_t>::min()) {
      num_ = difference;
      return *this;
    }
    if (den_ == rhs.den_) {
      assign_wide(static_cast<i128>(num_) - rhs.num_, den_);
    } else {
      assign_wide(static_cast<i128>(num_) * rhs.den_ -
                      static_cast<i128>(rhs.num_) * den_,
                  static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign_big(to_mpq() - rhs.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!is_big() && !rhs.is_big()) {
    assign_wide(static_cast<i128>(num_) * rhs.num_,
                static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational: division by zero");
  if (!is_big() && !rhs.is_big()) {
    assign_wide(static_cast<i128>(num_) * rhs.den_,
                static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool Rational::big_equal(const Rational& lhs, const Rational& rhs) {
  if (lhs.is_big() != rhs.is_big()) return false;
  return *lhs.big_ == *rhs.big_;
}

std::strong_ordering Rational::big_compare(const Rational& lhs,
                                           const Rational& rhs) {
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace fairdiv
