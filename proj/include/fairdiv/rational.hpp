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

#ifndef FAIRDIV_RATIONAL_HPP_
#define FAIRDIV_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fairdiv {

// Exact rational number in canonical form (denominator > 0, gcd 1).
//
// Values whose numerator and denominator fit in 64 bits are stored inline and
// combined with 128-bit intermediates. Anything larger is promoted to a GMP
// rational, and demoted again as soon as the result fits. Arithmetic never
// rounds.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other)
      : num_(other.num_), den_(other.den_) {
    if (other.big_) copy_big(other);
  }
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      if (other.big_) {
        copy_big(other);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "p/q", "-p/q". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  std::string to_string() const;
  mpq_class to_mpq() const;

  int sign() const {
    if (big_) return big_sign();
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_integer() const;
  std::string numerator_string() const;
  std::string denominator_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }

  // Both sides are canonical and demoted whenever they fit, so a small value
  // never equals a big one.
  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) {
      return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    return big_equal(lhs, rhs);
  }
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) {
      if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
      return static_cast<__int128>(lhs.num_) * rhs.den_ <=>
             static_cast<__int128>(rhs.num_) * lhs.den_;
    }
    return big_compare(lhs, rhs);
  }

 private:
  void copy_big(const Rational& other);
  int big_sign() const;
  static bool big_equal(const Rational& lhs, const Rational& rhs);
  static std::strong_ordering big_compare(const Rational& lhs,
                                          const Rational& rhs);
  void assign_wide(__int128 numerator, __int128 denominator);
  void assign_big(mpq_class value);
  bool is_big() const { return big_ != nullptr; }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace fairdiv

#endif  // FAIRDIV_RATIONAL_HPP_
