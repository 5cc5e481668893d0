#include "addpoly/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace addpoly::kernels {
namespace {

void add_mod_scalar(std::span<Digit> dst, std::span<const Digit> src, Digit p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::uint64_t s = std::uint64_t{dst[i]} + src[i];
    dst[i] = static_cast<Digit>(s >= p ? s - p : s);
  }
}

void sub_mod_scalar(std::span<Digit> dst, std::span<const Digit> src, Digit p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : static_cast<Digit>(std::uint64_t{dst[i]} + p - src[i]);
  }
}

void axpy_mod_scalar(std::span<Digit> dst, std::span<const Digit> src, Digit c, Digit p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<Digit>((std::uint64_t{dst[i]} + std::uint64_t{c} * src[i]) % p);
  }
}

Digit dot_mod_scalar(std::span<const Digit> a, std::span<const Digit> b, Digit p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = (acc + std::uint64_t{a[i]} * b[i]) % p;
  }
  return static_cast<Digit>(acc);
}

constexpr KernelSet kScalar{"scalar", add_mod_scalar, sub_mod_scalar, axpy_mod_scalar, dot_mod_scalar};

bool forced_scalar() {
  const char* env = std::getenv("ADDPOLY_SIMD");
  return env != nullptr && std::strcmp(env, "scalar") == 0;
}

}  // namespace

const KernelSet& scalar() { return kScalar; }

const KernelSet& active() {
  static const KernelSet& chosen = [] () -> const KernelSet& {
    if (!forced_scalar()) {
      if (const KernelSet* v = avx2()) return *v;
    }
    return kScalar;
  }();
  return chosen;
}

}  // namespace addpoly::kernels
