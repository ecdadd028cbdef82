#include "overrank/simd/kernels.hpp"

namespace overrank::simd::detail {

namespace {

void add_mod_scalar(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t s = acc[i] + x[i];
    acc[i] = s >= p ? s - p : s;
  }
}

void sub_mod_scalar(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t a = acc[i];
    const std::uint32_t b = x[i];
    acc[i] = a >= b ? a - b : a + (p - b);
  }
}

}  // namespace

const ModKernels kScalarKernels{Isa::Scalar, "scalar", add_mod_scalar, sub_mod_scalar};

}  // namespace overrank::simd::detail
