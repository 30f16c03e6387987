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

#include <atomic>
#include <stdexcept>
#include <string>

#include "pnpseq/simd.hpp"

namespace pnpseq::simd {

namespace {

bool cpu_has_avx2() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

void check_sizes(std::size_t a, std::size_t b, std::size_t out) {
  if (a != b || a != out) {
    throw std::invalid_argument("simd kernel: mismatched span lengths");
  }
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return avx2::compiled() && cpu_has_avx2();
  }
  return false;
}

Isa detected_isa() {
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("ISA not available: " +
                                std::string(isa_name(isa)));
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

void telescoping_totals(const TelescopingParams& params,
                        std::span<const double> xs, std::span<const double> ys,
                        double shift, std::span<double> out) {
  check_sizes(xs.size(), ys.size(), out.size());
  if (active_isa() == Isa::kAvx2) {
    avx2::telescoping_totals(params, xs.data(), ys.data(), shift, out.data(),
                             out.size());
  } else {
    scalar::telescoping_totals(params, xs.data(), ys.data(), shift, out.data(),
                               out.size());
  }
}

void lerp_rows(std::span<const double> row0, std::span<const double> row1,
               double frac, std::span<double> out) {
  check_sizes(row0.size(), row1.size(), out.size());
  if (active_isa() == Isa::kAvx2) {
    avx2::lerp_rows(row0.data(), row1.data(), frac, out.data(), out.size());
  } else {
    scalar::lerp_rows(row0.data(), row1.data(), frac, out.data(), out.size());
  }
}

}  // namespace pnpseq::simd
