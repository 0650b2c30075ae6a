// Copyright 2026 The fairdire Authors
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

#ifndef FAIRDIRE_RATIONAL_H_
#define FAIRDIRE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace fairdire {

// Exact fraction over 64-bit integers, always kept in lowest terms with a
// positive denominator. Comparisons cross-multiply in 128 bits, so no
// floating point ever decides an ordering.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t value);  // NOLINT(runtime/explicit)
  Rational(int64_t num, int64_t den);

  // Accepts "p", "p/q" and finite decimals such as "0.25" (kept exact).
  static Rational Parse(std::string_view text);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  double ToDouble() const { return static_cast<double>(num_) / den_; }
  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;
  // Fixed 6-decimal rendering.
  std::string ToDecimalString(int digits = 6) const;

  Rational Abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fairdire

#endif  // FAIRDIRE_RATIONAL_H_
