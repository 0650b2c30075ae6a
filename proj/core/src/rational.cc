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

#include "fairdire/rational.h"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "fairdire/errors.h"

namespace fairdire {
namespace {

__extension__ typedef __int128 Wide;

int64_t Narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<int64_t>(v);
}

Rational Make(Wide num, Wide den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(Narrow(num), Narrow(den));
}

int64_t ParseInt(std::string_view text, std::string_view whole) {
  int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw DomainError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(int64_t value) : num_(value), den_(1) {}

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(ParseInt(text.substr(0, slash), text),
                    ParseInt(text.substr(slash + 1), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    bool negative = !whole.empty() && whole.front() == '-';
    int64_t int_part = whole.empty() || whole == "-" || whole == "+"
                           ? 0
                           : ParseInt(whole, text);
    if (frac.front() == '-' || frac.front() == '+') {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    int64_t frac_part = ParseInt(frac, text);
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Wide num = static_cast<Wide>(int_part < 0 ? -int_part : int_part) * scale +
               frac_part;
    if (negative) num = -num;
    return Make(num, scale);
  }
  return Rational(ParseInt(text, text));
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::ToDecimalString(int digits) const {
  // Round half away from zero at the requested digit.
  Wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Wide n = num_;
  bool negative = n < 0;
  if (negative) n = -n;
  Wide scaled = (n * scale * 2 + den_) / (2 * static_cast<Wide>(den_));
  Wide int_part = scaled / scale;
  Wide frac_part = scaled % scale;
  std::string frac = std::to_string(static_cast<int64_t>(frac_part));
  while (static_cast<int>(frac.size()) < digits) frac.insert(0, "0");
  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(static_cast<int64_t>(int_part));
  if (digits > 0) out += "." + frac;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Make(static_cast<Wide>(a.num_) * b.den_ +
                  static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Make(static_cast<Wide>(a.num_) * b.den_ -
                  static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Make(static_cast<Wide>(a.num_) * b.num_,
              static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero rational");
  return Make(static_cast<Wide>(a.num_) * b.den_,
              static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

}  // namespace fairdire
