// Copyright 2026 The Fourier Knots Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace fknot {

/// Integer Laurent polynomial Σ c_e t^e. Stored densely from the lowest
/// nonzero exponent; both ends are always nonzero, and zero is the empty
/// polynomial.
class LaurentPolynomial {
 public:
  using Coefficient = mpz_class;

  LaurentPolynomial() = default;
  /// c · t^exponent.
  static LaurentPolynomial Monomial(Coefficient c, int exponent = 0);
  /// coefficients[i] multiplies t^(low + i).
  static LaurentPolynomial FromCoefficients(int low,
                                            std::vector<Coefficient> coeffs);
  static LaurentPolynomial FromCoefficients(int low,
                                            const std::vector<long>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int low_exponent() const { return low_; }
  int high_exponent() const {
    return low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  Coefficient coefficient(int exponent) const;
  /// Nonzero (exponent, coefficient) pairs, exponents ascending.
  std::vector<std::pair<int, Coefficient>> terms() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Exact quotient; throws std::domain_error on a nonzero remainder or a
  /// zero divisor.
  LaurentPolynomial DivideExact(const LaurentPolynomial& divisor) const;

  /// Multiplies by the unit ±t^k that makes the lowest exponent 0 and the
  /// constant term positive.
  LaurentPolynomial Normalized() const;
  /// Substitutes t → 1/t.
  LaurentPolynomial Inverted() const;
  /// Δ(t) ≐ Δ(1/t) up to ±t^k.
  bool IsSymmetricUpToUnits() const;

  Coefficient Evaluate(long t) const;

  /// e.g. "t^2 - t + 1"; "0" for zero.
  std::string ToString() const;

 private:
  void Trim();

  int low_ = 0;
  std::vector<Coefficient> coeffs_;
};

}  // namespace fknot
