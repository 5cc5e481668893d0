#pragma once

// Species: the multiset of eigenfactor signatures (m; lambda_1..lambda_k),
// where lambda_j counts rational Jordan blocks of order j for an eigenfactor
// of degree m. Everything the counting code needs is read from here.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace addpoly {

struct Signature {
  std::size_t m = 1;
  std::vector<std::size_t> lambdas;

  /// sum_j j * lambda_j, the dimension over the degree-m field.
  std::size_t reduced_dimension() const;
  std::size_t dimension() const { return m * reduced_dimension(); }
  /// Number of blocks, sum_j lambda_j.
  std::size_t blocks() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

class Species {
 public:
  Species() = default;
  /// Trims trailing zeros, drops empty signatures, sorts.
  explicit Species(std::vector<Signature> entries);

  const std::vector<Signature>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t dimension() const;

  friend auto operator<=>(const Species&, const Species&) = default;

 private:
  std::vector<Signature> entries_;
};

void trim_trailing_zeros(std::vector<std::size_t>& lambdas);

/// "{(1;0,2),(2;1)}"
std::string to_string(const Signature& s);
std::string to_string(const Species& s);

}  // namespace addpoly
