#include "doctest.h"

#include <random>
#include <vector>

#include "addpoly/kernels.hpp"

using addpoly::Digit;
namespace kn = addpoly::kernels;

namespace {

std::vector<Digit> random_digits(std::mt19937_64& rng, std::size_t n, Digit p) {
  std::uniform_int_distribution<Digit> dist(0, p - 1);
  std::vector<Digit> v(n);
  for (auto& d : v) d = dist(rng);
  return v;
}

const Digit kModuli[] = {2, 3, 5, 7, 251, 65521, (Digit{1} << 21) - 9, 2147483647u, 4294967291u};

}  // namespace

TEST_CASE("scalar kernels match a direct formula") {
  std::mt19937_64 rng(1);
  const auto& s = kn::scalar();
  for (Digit p : kModuli) {
    auto a = random_digits(rng, 37, p);
    auto b = random_digits(rng, 37, p);
    auto sum = a, diff = a, ax = a;
    s.add_mod(sum, b, p);
    s.sub_mod(diff, b, p);
    const Digit c = p - 1;
    s.axpy_mod(ax, b, c, p);
    std::uint64_t dot = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(sum[i] == (std::uint64_t{a[i]} + b[i]) % p);
      CHECK(diff[i] == (std::uint64_t{a[i]} + p - b[i]) % p);
      CHECK(ax[i] == (std::uint64_t{a[i]} + std::uint64_t{c} * b[i] % p) % p);
      dot = (dot + std::uint64_t{a[i]} * b[i] % p) % p;
    }
    CHECK(s.dot_mod(a, b, p) == dot);
  }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const kn::KernelSet* v = kn::avx2();
  if (v == nullptr) {
    MESSAGE("AVX2 variant unavailable on this machine; skipped");
    return;
  }
  const auto& s = kn::scalar();
  std::mt19937_64 rng(2);
  for (Digit p : kModuli) {
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 64u, 257u, 1000u}) {
      auto a = random_digits(rng, n, p);
      auto b = random_digits(rng, n, p);
      std::uniform_int_distribution<Digit> cd(0, p - 1);
      const Digit c = cd(rng);
      auto s1 = a, v1 = a;
      s.add_mod(s1, b, p);
      v->add_mod(v1, b, p);
      CHECK(s1 == v1);
      auto s2 = a, v2 = a;
      s.sub_mod(s2, b, p);
      v->sub_mod(v2, b, p);
      CHECK(s2 == v2);
      auto s3 = a, v3 = a;
      s.axpy_mod(s3, b, c, p);
      v->axpy_mod(v3, b, c, p);
      CHECK(s3 == v3);
      CHECK(s.dot_mod(a, b, p) == v->dot_mod(a, b, p));
    }
  }
}

TEST_CASE("extreme residues survive the vector paths") {
  const kn::KernelSet* v = kn::avx2();
  if (v == nullptr) return;
  for (Digit p : kModuli) {
    std::vector<Digit> a(41, p - 1), b(41, p - 1);
    auto s1 = a, v1 = a;
    kn::scalar().axpy_mod(s1, b, p - 1, p);
    v->axpy_mod(v1, b, p - 1, p);
    CHECK(s1 == v1);
    CHECK(kn::scalar().dot_mod(a, b, p) == v->dot_mod(a, b, p));
  }
}

TEST_CASE("active kernel set is one of the compiled variants") {
  const auto& a = kn::active();
  CHECK((&a == &kn::scalar() || &a == kn::avx2()));
}
