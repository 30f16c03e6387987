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

// AVX2 kernels. This translation unit is built with -mavx2 (and never -mfma)
// and is only called after the dispatcher has confirmed CPU support. Each
// lane mirrors the scalar reference operation for operation.

#include <limits>

#include "pnpseq/simd.hpp"

#if defined(PNPSEQ_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace pnpseq::simd::avx2 {

#if defined(PNPSEQ_HAVE_AVX2)

namespace {

struct Lanes {
  __m256d zero = _mm256_setzero_pd();
  __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d sign = _mm256_set1_pd(-0.0);
  __m256d neg_slack = _mm256_set1_pd(-kDiscriminantSlack);
};

inline __m256d smallest_root(const Lanes& k, __m256d a, __m256d b,
                             __m256d c) {
  const __m256d disc = _mm256_sub_pd(_mm256_mul_pd(b, b), _mm256_mul_pd(a, c));
  const __m256d ok = _mm256_cmp_pd(disc, k.neg_slack, _CMP_GE_OQ);
  const __m256d pos = _mm256_cmp_pd(disc, k.zero, _CMP_GT_OQ);
  const __m256d s = _mm256_sqrt_pd(_mm256_and_pd(pos, disc));
  const __m256d s_signed =
      _mm256_or_pd(_mm256_andnot_pd(k.sign, s), _mm256_and_pd(k.sign, b));
  const __m256d q = _mm256_xor_pd(_mm256_add_pd(b, s_signed), k.sign);
  const __m256d r1 = _mm256_div_pd(q, a);
  const __m256d q_nonzero = _mm256_cmp_pd(q, k.zero, _CMP_NEQ_UQ);
  const __m256d r2 = _mm256_and_pd(q_nonzero, _mm256_div_pd(c, q));
  const __m256d lt = _mm256_cmp_pd(r1, r2, _CMP_LT_OQ);
  const __m256d lo = _mm256_blendv_pd(r2, r1, lt);
  const __m256d hi = _mm256_blendv_pd(r1, r2, lt);
  const __m256d hi_ok = _mm256_cmp_pd(hi, k.zero, _CMP_GE_OQ);
  const __m256d lo_ok = _mm256_cmp_pd(lo, k.zero, _CMP_GE_OQ);
  const __m256d t =
      _mm256_blendv_pd(_mm256_blendv_pd(k.inf, hi, hi_ok), lo, lo_ok);
  return _mm256_blendv_pd(k.inf, t, ok);
}

}  // namespace

bool compiled() { return true; }

void telescoping_totals(const TelescopingParams& params, const double* xs,
                        const double* ys, double shift, double* out,
                        std::size_t n) {
  const Lanes k;
  const double a_s = params.speed * params.speed - 1.0;
  const double r0_sq = params.rest_radius * params.rest_radius;
  const double r0_v = params.rest_radius * params.speed;
  const __m256d a = _mm256_set1_pd(a_s);
  const __m256d v = _mm256_set1_pd(params.speed);
  const __m256d r0 = _mm256_set1_pd(params.rest_radius);
  const __m256d r0sq = _mm256_set1_pd(r0_sq);
  const __m256d r0v = _mm256_set1_pd(r0_v);
  const __m256d base_x = _mm256_set1_pd(params.base_x);
  const __m256d x_left = _mm256_set1_pd(params.x_left);
  const __m256d shift_v = _mm256_set1_pd(shift);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(xs + i), shift_v);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d u = _mm256_sub_pd(x, base_x);
    const __m256d c = _mm256_sub_pd(
        r0sq, _mm256_add_pd(_mm256_mul_pd(u, u), _mm256_mul_pd(y, y)));

    const __m256d t_extend = smallest_root(k, a, _mm256_add_pd(r0v, u), c);
    const __m256d t_raw = smallest_root(k, a, _mm256_sub_pd(u, r0v), c);
    const __m256d retract_ok = _mm256_cmp_pd(
        _mm256_sub_pd(r0, _mm256_mul_pd(v, t_raw)), k.neg_slack, _CMP_GE_OQ);
    const __m256d t_retract = _mm256_blendv_pd(k.inf, t_raw, retract_ok);
    const __m256d take_retract =
        _mm256_cmp_pd(t_retract, t_extend, _CMP_LT_OQ);
    const __m256d t = _mm256_blendv_pd(t_extend, t_retract, take_retract);

    const __m256d pick_x = _mm256_sub_pd(x, t);
    const __m256d exits = _mm256_cmp_pd(pick_x, x_left, _CMP_LT_OQ);
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(_mm256_add_pd(t, t), k.inf,
                                               exits));
  }
  if (i < n) scalar::telescoping_totals(params, xs + i, ys + i, shift, out + i,
                                        n - i);
}

void lerp_rows(const double* row0, const double* row1, double frac,
               double* out, std::size_t n) {
  const __m256d f = _mm256_set1_pd(frac);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(row0 + i);
    const __m256d b = _mm256_loadu_pd(row1 + i);
    _mm256_storeu_pd(out + i,
                     _mm256_add_pd(a, _mm256_mul_pd(f, _mm256_sub_pd(b, a))));
  }
  if (i < n) scalar::lerp_rows(row0 + i, row1 + i, frac, out + i, n - i);
}

#else  // !PNPSEQ_HAVE_AVX2

bool compiled() { return false; }

void telescoping_totals(const TelescopingParams& params, const double* xs,
                        const double* ys, double shift, double* out,
                        std::size_t n) {
  scalar::telescoping_totals(params, xs, ys, shift, out, n);
}

void lerp_rows(const double* row0, const double* row1, double frac,
               double* out, std::size_t n) {
  scalar::lerp_rows(row0, row1, frac, out, n);
}

#endif

}  // namespace pnpseq::simd::avx2
