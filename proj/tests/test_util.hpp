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

#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <vector>

#include "fourier_knots/errors.hpp"
#include "fourier_knots/fourier.hpp"

namespace fknot {

/// Coprime 2 ≤ p < q ≤ qmax with p ≤ pmax (default: no bound).
inline std::vector<TorusParams> CoprimePairs(int pmin, int qmax,
                                             int pmax = 1 << 20) {
  std::vector<TorusParams> out;
  for (int p = pmin; p <= std::min(pmax, qmax); ++p) {
    for (int q = p + 1; q <= qmax; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

inline void ExpectKnotError(const std::function<void()>& fn, ErrorCode code) {
  try {
    fn();
    ADD_FAILURE() << "expected " << ToString(code) << ", nothing thrown";
  } catch (const KnotError& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace fknot
