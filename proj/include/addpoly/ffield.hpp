#pragma once

// Finite-field tower F_p ⊂ F_r ⊂ F_q (⊂ F_{q^E}).
//
// Every element is stored as its flattened F_p digit vector: a level of
// relative degree D over a base of F_p-degree M holds D blocks of M digits,
// block i being the coefficient of z^i. Lower levels embed into higher ones
// by zero padding, so subfield membership is a check on the trailing digits.
// Encodings are always fully reduced; equality is digit equality.

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "addpoly/kernels.hpp"

namespace addpoly {

using BigInt = boost::multiprecision::cpp_int;
using Coords = boost::container::small_vector<Digit, 8>;

enum class Level : std::uint8_t { prime = 0, r = 1, q = 2, ext = 3 };

const char* level_name(Level level) noexcept;

struct Element {
  Level level = Level::prime;
  Coords coords;

  friend bool operator==(const Element&, const Element&) = default;
};

namespace detail {
struct TowerData;
}

class FieldTower;

// One level of a tower viewed as a field. Holds a reference to the shared,
// immutable tower data, so copies are cheap and outlive the FieldTower.
class Field {
 public:
  Level level() const noexcept { return level_; }
  Digit characteristic() const noexcept;
  /// [F : F_p]
  std::size_t degree() const noexcept;
  /// Degree over the level directly below (1 for the prime field).
  std::size_t relative_degree() const noexcept;
  Field base() const;
  FieldTower tower() const;

  /// |F| if it fits in 64 bits.
  std::optional<std::uint64_t> cardinality() const noexcept;
  BigInt order() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t v) const;
  /// Embeds an element of this level or any level below.
  Element embed(const Element& x) const;
  /// Inverse of embed: fails with NotInSubfield if x is not in this level.
  Element coerce(const Element& x) const;
  bool contains(const Element& x) const;
  bool is_zero(const Element& x) const;
  bool is_one(const Element& x) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;
  Element pow(const Element& a, const BigInt& e) const;
  /// a^(p^t)
  Element frobenius(const Element& a, std::uint64_t t = 1) const;
  /// The unique b with b^(p^t) = a.
  Element frobenius_inverse(const Element& a, std::uint64_t t = 1) const;

  Element random(std::mt19937_64& rng) const;
  /// Element whose digits are the base-p expansion of index.
  Element element(std::uint64_t index) const;
  std::uint64_t index(const Element& a) const;

  // Digit-span primitives used by the polynomial and matrix code. All spans
  // have length degree(); out may not alias the inputs.
  void add_to(std::span<Digit> acc, std::span<const Digit> x) const;
  void sub_from(std::span<Digit> acc, std::span<const Digit> x) const;
  void mul_into(std::span<const Digit> a, std::span<const Digit> b, std::span<Digit> out) const;
  void frobenius_into(std::span<const Digit> a, std::uint64_t t, std::span<Digit> out) const;

  // In-place forms on elements of this level.
  void add_to(Element& acc, const Element& x) const { add_to(span(acc), span(x)); }
  void sub_from(Element& acc, const Element& x) const { sub_from(span(acc), span(x)); }
  void mul_into(const Element& a, const Element& b, Element& out) const { mul_into(span(a), span(b), span(out)); }

  static std::span<Digit> span(Element& x) noexcept { return {x.coords.data(), x.coords.size()}; }
  static std::span<const Digit> span(const Element& x) noexcept { return {x.coords.data(), x.coords.size()}; }

  bool same_as(const Field& other) const noexcept;

 private:
  friend class FieldTower;
  Field(std::shared_ptr<const detail::TowerData> data, Level level) : data_(std::move(data)), level_(level) {}

  void check(const Element& x) const;

  std::shared_ptr<const detail::TowerData> data_;
  Level level_;
};

struct TowerOverrides {
  /// Monic, degree e, coefficients in F_p (little-endian).
  std::optional<std::vector<Element>> m_r;
  /// Monic, degree k, coefficients in F_r.
  std::optional<std::vector<Element>> m_q;
};

class FieldTower {
 public:
  /// Without overrides each construction polynomial is the lexicographically
  /// smallest monic irreducible of its degree, comparing a_0 first and each
  /// coefficient by the integer value of its digits.
  static FieldTower create(Digit p, std::size_t e, std::size_t k, const TowerOverrides& overrides = {});

  /// Same tower plus a fourth level F_{q^E} built by the same rule.
  FieldTower with_extension(std::size_t ext_degree, std::optional<std::vector<Element>> m_ext = std::nullopt) const;

  Field prime() const { return field(Level::prime); }
  Field r() const { return field(Level::r); }
  Field q() const { return field(Level::q); }
  Field ext() const { return field(Level::ext); }
  Field field(Level level) const;

  Digit p() const noexcept;
  std::size_t e() const noexcept;
  std::size_t k() const noexcept;
  bool has_extension() const noexcept;
  std::size_t ext_degree() const noexcept;

  /// Construction polynomial of a level over the level below (monic, little-endian).
  const std::vector<Element>& modulus(Level level) const;

  /// q-level element to its F_r representative; NotInSubfield otherwise.
  Element subfield_coerce(const Element& x) const;
  /// x^s for s a power of p; InputError otherwise.
  Element frobenius(const Element& x, const BigInt& s) const;

  /// r = p^e as an integer.
  BigInt r_value() const;
  BigInt q_value() const;

  /// Same p, e, k and construction polynomials up to level q.
  bool compatible(const FieldTower& other) const noexcept;

 private:
  explicit FieldTower(std::shared_ptr<const detail::TowerData> data) : data_(std::move(data)) {}
  friend class Field;
  std::shared_ptr<const detail::TowerData> data_;
};

/// Integer value of a little-endian digit vector in base p.
BigInt digits_value(std::span<const Digit> digits, Digit p);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace addpoly
