// Copyright 2026 The pnpseq Authors
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

#include <limits>

#include "pnpseq/simd.hpp"

namespace pnpseq::simd::scalar {

void telescoping_totals(const TelescopingParams& params, const double* xs,
                        const double* ys, double shift, double* out,
                        std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs[i] - shift;
    const double t = telescoping_intercept_scalar(params, x, ys[i]);
    const double pick_x = x - t;
    out[i] = pick_x < params.x_left ? inf : t + t;
  }
}

void lerp_rows(const double* row0, const double* row1, double frac,
               double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = row0[i] + frac * (row1[i] - row0[i]);
  }
}

}  // namespace pnpseq::simd::scalar
