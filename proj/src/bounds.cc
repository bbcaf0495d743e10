// Copyright 2026 The dicrit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dicrit/bounds.h"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dicrit {

namespace mp = boost::multiprecision;

BigInt Pow(const BigInt& base, unsigned exponent) {
  return mp::pow(base, exponent);
}

BigInt Binomial2(int s) { return BigInt(s) * (s - 1) / 2; }

BigInt MaderBoundGeneral(int n, int m, int c) {
  const int exponent = m - n + c;
  if (exponent < 0) {
    throw std::invalid_argument("m - n + c = " + std::to_string(exponent) +
                                " is negative");
  }
  return Pow(4, exponent) * (n - 1) + 1;
}

Rational SubdivisionBound(int n, int m) {
  if (n < 1 || m < 0) {
    throw std::invalid_argument("subdivision bound needs n >= 1 and m >= 0");
  }
  return Rational(Pow(4, m + 1) * n - 1, 3);
}

BigInt ComponentBound(int k, int s) {
  if (k < 1 || s < 0) {
    throw std::invalid_argument("component bound needs k >= 1 and s >= 0");
  }
  return Pow(k - 1, s) * Pow(3, Binomial2(s).convert_to<unsigned>());
}

BigInt FkBound(int k, int l) {
  if (k < 2 || l < 1) {
    throw std::invalid_argument("f_k(l) needs k >= 2 and l >= 1");
  }
  return Pow(ComponentBound(k, l), l - 1) + 1;
}

ScaledPower::ScaledPower(Rational coefficient, Rational exponent)
    : coefficient_(std::move(coefficient)), exponent_(std::move(exponent)) {
  if (coefficient_ <= 0) {
    throw std::invalid_argument("ScaledPower coefficient must be positive");
  }
}

ScaledPower ScaledPower::operator*(const ScaledPower& other) const {
  return ScaledPower(coefficient_ * other.coefficient_,
                     exponent_ + other.exponent_);
}

std::strong_ordering operator<=>(const ScaledPower& a, const ScaledPower& b) {
  // a <=> b  iff  ca/cb <=> 4^(eb-ea). With ca/cb = p/q and eb-ea = s/t,
  // raise both sides to the t-th power: p^t <=> q^t * 4^s.
  const Rational ratio = a.coefficient_ / b.coefficient_;
  const Rational gap = b.exponent_ - a.exponent_;
  const BigInt p = mp::numerator(ratio);
  const BigInt q = mp::denominator(ratio);
  const BigInt s = mp::numerator(gap);
  const BigInt t = mp::denominator(gap);
  const unsigned t_exp = t.convert_to<unsigned>();
  BigInt lhs = Pow(p, t_exp);
  BigInt rhs = Pow(q, t_exp);
  if (s >= 0) {
    rhs *= Pow(4, s.convert_to<unsigned>());
  } else {
    lhs *= Pow(4, BigInt(-s).convert_to<unsigned>());
  }
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ScaledPower::Log2() const {
  const double num = mp::numerator(coefficient_).convert_to<double>();
  const double den = mp::denominator(coefficient_).convert_to<double>();
  return std::log2(num) - std::log2(den) + 2.0 * exponent_.convert_to<double>();
}

std::string ScaledPower::ToString() const {
  std::ostringstream out;
  out << coefficient_ << " * 4^(" << exponent_ << ")";
  return out.str();
}

ScaledPower KnRecurrenceValue(int n) {
  if (n < 1) throw std::invalid_argument("K_n recurrence needs n >= 1");
  static thread_local std::map<int, ScaledPower> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  ScaledPower value(1, 0);
  if (n == 1) {
    value = ScaledPower(1, 0);
  } else if (n % 2 == 0) {
    value = ScaledPower(2, Rational(n * n, 2)) * KnRecurrenceValue(n / 2);
  } else {
    value = ScaledPower(1, 2 * n - 1) * KnRecurrenceValue(n - 1);
  }
  memo.emplace(n, value);
  return value;
}

ScaledPower KnClosedForm(const Rational& x) {
  return ScaledPower(1, Rational(2, 3) * x * x + 2 * x - Rational(8, 3));
}

KnBoundCheck CheckKnBound(int n_max) {
  KnBoundCheck result;
  for (int n = 1; n <= n_max; ++n) {
    ++result.checked;
    const Rational x(n);
    bool ok = KnRecurrenceValue(n) <= KnClosedForm(x);
    if (n >= 2) {
      const ScaledPower step(1, Rational(n * n, 2) + n);
      ok = ok && (step * KnClosedForm(x / 2)) == KnClosedForm(x);
    }
    if (!ok) {
      result.holds = false;
      result.first_failure = n;
      return result;
    }
  }
  return result;
}

}  // namespace dicrit
