#include "addpoly/kernels.hpp"

#include <algorithm>

#if defined(ADDPOLY_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
#include <immintrin.h>
#define ADDPOLY_AVX2_COMPILED 1
#endif

namespace addpoly::kernels {

#ifdef ADDPOLY_AVX2_COMPILED
namespace {

#define AVX2_FN __attribute__((target("avx2")))

// Lanes hold residues < p <= 2^31, so the 32-bit sum never wraps and
// min(x, x - p) picks the reduced value.
AVX2_FN void add_mod_avx2(std::span<Digit> dst, std::span<const Digit> src, Digit p) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  if (p <= (Digit{1} << 31)) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    for (; i + 8 <= n; i += 8) {
      __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
      __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
      __m256i s = _mm256_add_epi32(a, b);
      s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), s);
    }
  }
  for (; i < n; ++i) {
    std::uint64_t s = std::uint64_t{dst[i]} + src[i];
    dst[i] = static_cast<Digit>(s >= p ? s - p : s);
  }
}

AVX2_FN void sub_mod_avx2(std::span<Digit> dst, std::span<const Digit> src, Digit p) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  if (p <= (Digit{1} << 31)) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    for (; i + 8 <= n; i += 8) {
      __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
      __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
      __m256i d = _mm256_sub_epi32(a, b);
      d = _mm256_min_epu32(d, _mm256_add_epi32(d, vp));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), d);
    }
  }
  for (; i < n; ++i) {
    dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : static_cast<Digit>(std::uint64_t{dst[i]} + p - src[i]);
  }
}

// Four lanes in double precision: with p < 2^21 every intermediate is an
// integer below 2^53, so floor-division reduction is exact up to one fixup.
AVX2_FN void axpy_mod_avx2(std::span<Digit> dst, std::span<const Digit> src, Digit c, Digit p) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  std::size_t i = 0;
  if (p < kVectorModulusLimit) {
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d zero = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4) {
      __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + i));
      __m128i b = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + i));
      __m256d t = _mm256_add_pd(_mm256_cvtepi32_pd(a), _mm256_mul_pd(vc, _mm256_cvtepi32_pd(b)));
      __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
      __m256d r = _mm256_sub_pd(t, _mm256_mul_pd(q, vp));
      r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
      r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + i), _mm256_cvttpd_epi32(r));
    }
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<Digit>((std::uint64_t{dst[i]} + std::uint64_t{c} * src[i]) % p);
  }
}

AVX2_FN Digit dot_mod_avx2(std::span<const Digit> a, std::span<const Digit> b, Digit p) {
  const std::size_t n = a.size();
  std::uint64_t acc = 0;
  std::size_t i = 0;
  if (p < kVectorModulusLimit) {
    // Products are < 2^42; 2^18 of them per lane stay below 2^61.
    constexpr std::size_t kChunk = std::size_t{1} << 20;
    while (i + 4 <= n) {
      const std::size_t stop = std::min(n - (n - i) % 4, i + kChunk);
      __m256i sum = _mm256_setzero_si256();
      for (; i < stop; i += 4) {
        __m256i x = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a.data() + i)));
        __m256i y = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b.data() + i)));
        sum = _mm256_add_epi64(sum, _mm256_mul_epu32(x, y));
      }
      alignas(32) std::uint64_t lanes[4];
      _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), sum);
      for (std::uint64_t v : lanes) acc = (acc + v % p) % p;
    }
  }
  for (; i < n; ++i) acc = (acc + std::uint64_t{a[i]} * b[i]) % p;
  return static_cast<Digit>(acc);
}

#undef AVX2_FN

constexpr KernelSet kAvx2{"avx2", add_mod_avx2, sub_mod_avx2, axpy_mod_avx2, dot_mod_avx2};

}  // namespace

const KernelSet* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelSet* avx2() { return nullptr; }

#endif

}  // namespace addpoly::kernels
