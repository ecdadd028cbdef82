#include "overrank/simd/kernels.hpp"

#include <arm_neon.h>

namespace overrank::simd::detail {

namespace {

void add_mod_neon(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const uint32x4_t s = vaddq_u32(vld1q_u32(acc + i), vld1q_u32(x + i));
    vst1q_u32(acc + i, vminq_u32(s, vsubq_u32(s, vp)));
  }
  for (; i < len; ++i) {
    const std::uint32_t s = acc[i] + x[i];
    acc[i] = s >= p ? s - p : s;
  }
}

void sub_mod_neon(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const uint32x4_t d = vsubq_u32(vld1q_u32(acc + i), vld1q_u32(x + i));
    vst1q_u32(acc + i, vminq_u32(d, vaddq_u32(d, vp)));
  }
  for (; i < len; ++i) {
    const std::uint32_t a = acc[i];
    const std::uint32_t b = x[i];
    acc[i] = a >= b ? a - b : a + (p - b);
  }
}

const ModKernels kNeonKernels{Isa::Neon, "neon", add_mod_neon, sub_mod_neon};

}  // namespace

const ModKernels* neon_kernels() { return &kNeonKernels; }

}  // namespace overrank::simd::detail
