#pragma once

// Vector kernels over the prime field F_p.
//
// Digits are residues in [0, p). Every kernel has a portable scalar reference
// implementation; an AVX2 variant is compiled when ADDPOLY_HAVE_AVX2 is set
// and picked at runtime when the CPU supports it. Both variants must agree
// bit for bit (tests/test_kernels.cpp).
//
// Set ADDPOLY_SIMD=scalar in the environment to force the reference path.

#include <cstdint>
#include <span>

namespace addpoly {

using Digit = std::uint32_t;

namespace kernels {

struct KernelSet {
  const char* name;
  /// dst[i] = (dst[i] + src[i]) mod p
  void (*add_mod)(std::span<Digit> dst, std::span<const Digit> src, Digit p);
  /// dst[i] = (dst[i] - src[i]) mod p
  void (*sub_mod)(std::span<Digit> dst, std::span<const Digit> src, Digit p);
  /// dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy_mod)(std::span<Digit> dst, std::span<const Digit> src, Digit c, Digit p);
  /// sum_i a[i] * b[i] mod p
  Digit (*dot_mod)(std::span<const Digit> a, std::span<const Digit> b, Digit p);
};

const KernelSet& scalar();

/// nullptr when the variant was not compiled or the CPU lacks AVX2.
const KernelSet* avx2();

/// The set chosen once per process.
const KernelSet& active();

// Largest modulus the vector paths handle in double precision; above it the
// AVX2 variants fall back to the scalar loops.
inline constexpr Digit kVectorModulusLimit = Digit{1} << 21;

}  // namespace kernels
}  // namespace addpoly
