#include <algorithm>
#include <cstdlib>
#include <string>

#include "overrank/error.hpp"
#include "overrank/simd/kernels.hpp"

namespace overrank::simd {

namespace detail {
#if !defined(OVERRANK_HAVE_AVX2)
const ModKernels* avx2_kernels() { return nullptr; }
#endif
#if !defined(OVERRANK_HAVE_NEON)
const ModKernels* neon_kernels() { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const ModKernels* lookup(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &detail::kScalarKernels;
    case Isa::Avx2:
      return cpu_has_avx2() ? detail::avx2_kernels() : nullptr;
    case Isa::Neon:
      return detail::neon_kernels();
  }
  return nullptr;
}

}  // namespace

bool isa_available(Isa isa) { return lookup(isa) != nullptr; }

const ModKernels& kernels(Isa isa) {
  const ModKernels* k = lookup(isa);
  overrank::detail::require(k != nullptr, "kernel variant '" + std::string(isa_name(isa)) + "' is not available");
  return *k;
}

Isa best_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

const ModKernels& default_kernels() {
  if (const char* env = std::getenv("OVERRANK_ISA"); env != nullptr && *env != '\0') {
    return kernels(parse_isa(env));
  }
  return kernels(best_isa());
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

Isa parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::Scalar;
  if (name == "avx2") return Isa::Avx2;
  if (name == "neon") return Isa::Neon;
  if (name == "auto") return best_isa();
  throw PreconditionError("unknown kernel variant '" + std::string(name) + "'");
}

void add_scaled_mod(const ModKernels& k, std::span<std::uint32_t> acc, std::span<const std::uint32_t> x,
                    std::uint64_t w, std::uint32_t p, std::span<std::uint32_t> scratch) {
  const std::size_t len = std::min(acc.size(), x.size());
  overrank::detail::require(scratch.size() >= len, "add_scaled_mod: scratch too small");
  w %= p;
  if (w == 0 || len == 0) return;
  if (w == 1) {
    k.add_mod(acc.data(), x.data(), len, p);
    return;
  }
  std::copy_n(x.begin(), len, scratch.begin());
  for (;;) {
    if (w & 1u) k.add_mod(acc.data(), scratch.data(), len, p);
    w >>= 1;
    if (w == 0) break;
    k.add_mod(scratch.data(), scratch.data(), len, p);
  }
}

}  // namespace overrank::simd
