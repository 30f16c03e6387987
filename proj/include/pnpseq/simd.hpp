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

#ifndef PNPSEQ_SIMD_HPP_
#define PNPSEQ_SIMD_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <limits>
#include <span>
#include <string_view>

// Data-parallel inner loops.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 variant picked at runtime. The variants evaluate the
// same IEEE operations in the same order (no FMA contraction), so their
// results are bit-identical; tests/test_simd.cpp holds them to that.

namespace pnpseq::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Best ISA the running CPU and this build both support.
Isa detected_isa();
// ISA used by the dispatching entry points below. Defaults to detected_isa().
Isa active_isa();
// Forces an ISA (tests, benchmarks). Throws std::invalid_argument if the ISA
// is unavailable.
void set_active_isa(Isa isa);
bool isa_available(Isa isa);

struct TelescopingParams {
  double base_x = 0.0;
  double rest_radius = 0.0;  // |base -> drop-off|
  double speed = 2.0;        // radial end-effector speed, > 1
  double x_left = -5.0;
};

inline constexpr double kDiscriminantSlack = 1e-12;

// Smallest non-negative t with |rho(t) - r0| = v t for an object that sits at
// (x, y) now and moves left at unit speed; rho is its distance to the base.
// Returns +inf when neither the extending nor the retracting branch has a
// usable root. Written lane-style so the vector kernels can mirror it.
inline double telescoping_intercept_scalar(const TelescopingParams& p,
                                           double x, double y) {
  const double inf = std::numeric_limits<double>::infinity();
  const double v = p.speed;
  const double r0 = p.rest_radius;
  const double a = v * v - 1.0;
  const double u = x - p.base_x;
  const double c = r0 * r0 - (u * u + y * y);

  auto smallest_root = [&](double b) {
    const double disc = b * b - a * c;
    const bool ok = disc >= -kDiscriminantSlack;
    const double s = std::sqrt(disc > 0.0 ? disc : 0.0);
    const double q = -(b + std::copysign(s, b));
    const double r1 = q / a;
    const double r2 = q != 0.0 ? c / q : 0.0;
    const double lo = r1 < r2 ? r1 : r2;
    const double hi = r1 < r2 ? r2 : r1;
    const double t = lo >= 0.0 ? lo : (hi >= 0.0 ? hi : inf);
    return ok ? t : inf;
  };

  const double t_extend = smallest_root(r0 * v + u);
  const double t_retract_raw = smallest_root(u - r0 * v);
  const bool retract_ok = r0 - v * t_retract_raw >= -kDiscriminantSlack;
  const double t_retract = retract_ok ? t_retract_raw : inf;
  return t_retract < t_extend ? t_retract : t_extend;
}

// Full PnP cycle (reach + equal-length return) for objects at (xs[i] - shift,
// ys[i]); +inf when the intercept is missing or lies left of x_left.
void telescoping_totals(const TelescopingParams& params,
                        std::span<const double> xs, std::span<const double> ys,
                        double shift, std::span<double> out);

// out[i] = row0[i] + frac * (row1[i] - row0[i])
void lerp_rows(std::span<const double> row0, std::span<const double> row1,
               double frac, std::span<double> out);

// Per-ISA entry points, exposed for equivalence tests.
namespace scalar {
void telescoping_totals(const TelescopingParams& params, const double* xs,
                        const double* ys, double shift, double* out,
                        std::size_t n);
void lerp_rows(const double* row0, const double* row1, double frac,
               double* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool compiled();
void telescoping_totals(const TelescopingParams& params, const double* xs,
                        const double* ys, double shift, double* out,
                        std::size_t n);
void lerp_rows(const double* row0, const double* row1, double frac,
               double* out, std::size_t n);
}  // namespace avx2

inline bool same_bits(double a, double b) {
  std::uint64_t ua = 0;
  std::uint64_t ub = 0;
  std::memcpy(&ua, &a, sizeof a);
  std::memcpy(&ub, &b, sizeof b);
  return ua == ub;
}

}  // namespace pnpseq::simd

#endif  // PNPSEQ_SIMD_HPP_
