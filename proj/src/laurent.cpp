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

#include "fourier_knots/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fknot {

LaurentPolynomial LaurentPolynomial::Monomial(Coefficient c, int exponent) {
  LaurentPolynomial out;
  out.low_ = exponent;
  out.coeffs_.push_back(std::move(c));
  out.Trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::FromCoefficients(
    int low, std::vector<Coefficient> coeffs) {
  LaurentPolynomial out;
  out.low_ = low;
  out.coeffs_ = std::move(coeffs);
  out.Trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::FromCoefficients(
    int low, const std::vector<long>& coeffs) {
  std::vector<Coefficient> big(coeffs.begin(), coeffs.end());
  return FromCoefficients(low, std::move(big));
}

void LaurentPolynomial::Trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Coefficient& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(
    int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_exponent()) return 0;
  return coeffs_[exponent - low_];
}

std::vector<std::pair<int, LaurentPolynomial::Coefficient>>
LaurentPolynomial::terms() const {
  std::vector<std::pair<int, Coefficient>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high_exponent(), rhs.high_exponent());
  std::vector<Coefficient> sum(hi - lo + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum[low_ - lo + i] = coeffs_[i];
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    sum[rhs.low_ - lo + i] += rhs.coeffs_[i];
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  Trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  return *this += -rhs;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPolynomial::Coefficient> prod(a.coeffs_.size() +
                                                   b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPolynomial::FromCoefficients(a.low_ + b.low_, std::move(prod));
}

LaurentPolynomial LaurentPolynomial::DivideExact(
    const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  const std::size_t n = coeffs_.size();
  const std::size_t m = divisor.coeffs_.size();
  if (n < m) throw std::domain_error("inexact polynomial division");

  // Long division from the top; every leading-coefficient quotient must be
  // exact for an integral result.
  std::vector<Coefficient> rem = coeffs_;
  std::vector<Coefficient> quot(n - m + 1);
  const Coefficient& lead = divisor.coeffs_.back();
  Coefficient r;
  for (std::size_t step = n - m + 1; step-- > 0;) {
    Coefficient& top = rem[step + m - 1];
    if (top == 0) continue;
    mpz_fdiv_qr(quot[step].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                lead.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact polynomial division");
    for (std::size_t i = 0; i < m; ++i) {
      rem[step + i] -= quot[step] * divisor.coeffs_[i];
    }
  }
  if (std::any_of(rem.begin(), rem.end(),
                  [](const Coefficient& c) { return c != 0; })) {
    throw std::domain_error("inexact polynomial division");
  }
  return FromCoefficients(low_ - divisor.low_, std::move(quot));
}

LaurentPolynomial LaurentPolynomial::Normalized() const {
  if (is_zero()) return {};
  LaurentPolynomial out = coeffs_.front() < 0 ? -*this : *this;
  out.low_ = 0;
  return out;
}

LaurentPolynomial LaurentPolynomial::Inverted() const {
  if (is_zero()) return {};
  std::vector<Coefficient> rev(coeffs_.rbegin(), coeffs_.rend());
  return FromCoefficients(-high_exponent(), std::move(rev));
}

bool LaurentPolynomial::IsSymmetricUpToUnits() const {
  return Normalized() == Inverted().Normalized();
}

LaurentPolynomial::Coefficient LaurentPolynomial::Evaluate(long t) const {
  if (is_zero()) return 0;
  if (t == 0 && low_ < 0) throw std::domain_error("negative power of zero");
  Coefficient acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  Coefficient scale = 1;
  if (low_ >= 0) {
    mpz_pow_ui(scale.get_mpz_t(), Coefficient(t).get_mpz_t(), low_);
    return acc * scale;
  }
  mpz_pow_ui(scale.get_mpz_t(), Coefficient(t).get_mpz_t(), -low_);
  if (acc % scale != 0) throw std::domain_error("non-integral value");
  return acc / scale;
}

std::string LaurentPolynomial::ToString() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Coefficient& c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    const Coefficient mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += mag.get_str();
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace fknot
