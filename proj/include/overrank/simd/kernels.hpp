#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace overrank::simd {

enum class Isa { Scalar, Avx2, Neon };

/// Lane-wise modular kernels over u32 residues. All inputs must be < p and
/// p < 2^31. acc and x may alias.
struct ModKernels {
  Isa isa;
  const char* name;
  void (*add_mod)(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
  void (*sub_mod)(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
};

/// Kernel table for an ISA; throws PreconditionError if not built or not
/// supported by the running CPU.
const ModKernels& kernels(Isa isa);

bool isa_available(Isa isa);

/// Best ISA the running CPU supports.
Isa best_isa();

/// Kernels selected from OVERRANK_ISA if set (scalar|avx2|neon|auto), else best_isa().
const ModKernels& default_kernels();

std::vector<Isa> available_isas();

std::string_view isa_name(Isa isa);
/// Accepts "scalar", "avx2", "neon"; "auto" maps to best_isa().
Isa parse_isa(std::string_view name);

inline void add_mod(const ModKernels& k, std::span<std::uint32_t> acc, std::span<const std::uint32_t> x,
                    std::uint32_t p) {
  k.add_mod(acc.data(), x.data(), x.size() < acc.size() ? x.size() : acc.size(), p);
}

inline void sub_mod(const ModKernels& k, std::span<std::uint32_t> acc, std::span<const std::uint32_t> x,
                    std::uint32_t p) {
  k.sub_mod(acc.data(), x.data(), x.size() < acc.size() ? x.size() : acc.size(), p);
}

/// acc += w * x (mod p) for a small nonnegative multiplier, by double-and-add.
/// scratch must hold at least x.size() elements.
void add_scaled_mod(const ModKernels& k, std::span<std::uint32_t> acc, std::span<const std::uint32_t> x,
                    std::uint64_t w, std::uint32_t p, std::span<std::uint32_t> scratch);

namespace detail {
extern const ModKernels kScalarKernels;
const ModKernels* avx2_kernels();
const ModKernels* neon_kernels();
}  // namespace detail

}  // namespace overrank::simd
