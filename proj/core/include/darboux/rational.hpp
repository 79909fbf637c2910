// Copyright 2026 The darboux authors
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

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "darboux/errors.hpp"

namespace darboux {

/// Arbitrary-precision rational number. Always stored canonically:
/// gcd(|num|, den) = 1, den >= 1, zero is 0/1. A thin value wrapper over
/// GMP's mpq_class so the rest of the library never touches gmpxx
/// expression templates directly.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(long num, long den) : q_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpz_class& n) : q_(n) {}
  explicit Rat(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw Error("rational with zero denominator");
    q_.canonicalize();
  }

  /// Parses "p", "-p", or "p/q" in base 10. Anything else (floats included)
  /// is rejected.
  static Rat from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw Error("empty rational literal");
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] >= '0' && s[i] <= '9') {
        seen_digit = true;
      } else if (s[i] == '/' && !seen_slash && seen_digit && i + 1 < s.size()) {
        seen_slash = true;
      } else {
        throw Error("invalid rational literal '" + s + "'");
      }
    }
    if (!seen_digit) throw Error("invalid rational literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q(s);
    if (q.get_den() == 0) throw Error("rational with zero denominator");
    q.canonicalize();
    return Rat(std::move(q));
  }

  bool is_zero() const { return q_ == 0; }
  int sign() const { return sgn(q_); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    return Rat(mpq_class(q_ / o.q_));
  }
  Rat& operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
  }

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }
  bool operator<(const Rat& o) const { return q_ < o.q_; }
  bool operator<=(const Rat& o) const { return q_ <= o.q_; }
  bool operator>(const Rat& o) const { return q_ > o.q_; }
  bool operator>=(const Rat& o) const { return q_ >= o.q_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  /// Reduced canonical text: "0", "3", "-4/7".
  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

inline Rat operator*(long n, const Rat& r) { return Rat(n) * r; }

}  // namespace darboux
