#include "overrank/simd/kernels.hpp"

#include <immintrin.h>

namespace overrank::simd::detail {

namespace {

// s = a + b never overflows since a, b < p < 2^31; min(s, s - p) picks the
// reduced value because s - p wraps to a huge number when s < p.
void add_mod_avx2(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i s = _mm256_add_epi32(a, b);
    const __m256i r = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
  }
  for (; i < len; ++i) {
    const std::uint32_t s = acc[i] + x[i];
    acc[i] = s >= p ? s - p : s;
  }
}

// d = a - b wraps when a < b; then d + p is the answer and is the smaller one.
void sub_mod_avx2(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i d = _mm256_sub_epi32(a, b);
    const __m256i r = _mm256_min_epu32(d, _mm256_add_epi32(d, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
  }
  for (; i < len; ++i) {
    const std::uint32_t a = acc[i];
    const std::uint32_t b = x[i];
    acc[i] = a >= b ? a - b : a + (p - b);
  }
}

const ModKernels kAvx2Kernels{Isa::Avx2, "avx2", add_mod_avx2, sub_mod_avx2};

}  // namespace

const ModKernels* avx2_kernels() { return &kAvx2Kernels; }

}  // namespace overrank::simd::detail
