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

// Exact evaluation of the subdivision and criticality bound formulas.

#ifndef DICRIT_BOUNDS_H_
#define DICRIT_BOUNDS_H_

#include <compare>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dicrit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt Pow(const BigInt& base, unsigned exponent);
BigInt Binomial2(int s);  // s choose 2

// 4^(m-n+c) * (n-1) + 1. Throws std::invalid_argument when m-n+c < 0.
BigInt MaderBoundGeneral(int n, int m, int c);

// (4^(m+1) * n - 1) / 3, exact. Requires n >= 1, m >= 0.
Rational SubdivisionBound(int n, int m);

// (k-1)^s * 3^C(s,2): the component-count ceiling for a k-dicritical digraph
// after deleting s vertices.
BigInt ComponentBound(int k, int s);

// ((k-1)^l * 3^C(l,2))^(l-1) + 1. Requires k >= 2, l >= 1.
BigInt FkBound(int k, int l);

// coefficient * 4^exponent with positive rational coefficient and rational
// exponent. Comparison is exact: exponent denominators are cleared by raising
// both sides to a common power before comparing integers.
class ScaledPower {
 public:
  ScaledPower(Rational coefficient, Rational exponent);

  const Rational& coefficient() const { return coefficient_; }
  const Rational& exponent() const { return exponent_; }

  ScaledPower operator*(const ScaledPower& other) const;

  friend std::strong_ordering operator<=>(const ScaledPower& a,
                                          const ScaledPower& b);
  friend bool operator==(const ScaledPower& a, const ScaledPower& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // log2 of the value, for diagnostics and floating-point cross-checks.
  double Log2() const;
  std::string ToString() const;

 private:
  Rational coefficient_;
  Rational exponent_;
};

// Upper bound on mader(bid K_n) produced by unrolling the recurrence:
// F(1) = 1, F(n) = 4^(n^2/2) * 2 * F(n/2) for even n, and
// F(n) = 4^(2n-1) * F(n-1) for odd n.
ScaledPower KnRecurrenceValue(int n);

// g(x) = 4^(2x^2/3 + 2x - 8/3).
ScaledPower KnClosedForm(const Rational& x);

struct KnBoundCheck {
  bool holds = true;
  std::optional<int> first_failure;
  int checked = 0;
};

// F(n) <= g(n) for every 1 <= n <= n_max, together with the identity
// 4^(n^2/2 + n) * g(n/2) = g(n) that closes the induction.
KnBoundCheck CheckKnBound(int n_max);

}  // namespace dicrit

#endif  // DICRIT_BOUNDS_H_
