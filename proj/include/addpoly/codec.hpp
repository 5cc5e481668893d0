#pragma once

// JSON forms of field elements, polynomials, species and job descriptions.
//
// An element is a nested little-endian array: one entry per coordinate over
// the next level down, with levels of relative degree one collapsed. Over
// F_4 = F_2[g] the element g + 1 is [1,1]; over F_2 the element 1 is 1. A
// bare integer c is also accepted anywhere as c times one.

#include <optional>
#include <string>

#include "json.hpp"

#include "addpoly/additive.hpp"
#include "addpoly/latcount.hpp"
#include "addpoly/species.hpp"
#include "addpoly/upoly.hpp"

namespace addpoly {

using Json = nlohmann::ordered_json;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json encode_big(const BigInt& v);

Json encode_element(const Field& F, const Element& x);
/// `where` names the location for error messages, e.g. "f.coeffs[2]".
Element decode_element(const Field& F, const Json& j, const std::string& where);

Json encode_upoly(const UPoly& u);
/// {"r_exp": e, "coeffs": [a_0 .. a_n]}
Json encode_additive(const AdditivePoly& f);
/// Accepts {"coeffs": [...]}, {"terms": [[i, c], ...]} or a bare coefficient list.
AdditivePoly decode_additive(const FieldTower& T, const Json& j, const std::string& where = "f");

/// [[m, [lambda_1, ...]], ...]
Json encode_species(const Species& s);
Species decode_species(const Json& j, const std::string& where = "species");

/// Sparse {"degree": n, "terms": [[i, c], ...]} with zero terms omitted.
Json encode_sparse(const UPoly& u);

struct JobSpec {
  std::optional<FieldTower> tower;
  std::optional<AdditivePoly> f;
  std::optional<long> d;
  bool all = false;
  std::optional<std::uint64_t> t;
  std::optional<std::size_t> n;
  std::optional<BigInt> r;
  std::uint64_t seed = 0;
  std::size_t dim_budget = 6;
  std::uint64_t max_ext = 32;

  const FieldTower& require_tower() const;
  const AdditivePoly& require_f() const;
  CountBudget count_budget() const;
  OracleBudget oracle_budget() const;
};

/// Unknown keys and malformed values raise InputError naming the key.
JobSpec parse_job(const Json& j);

}  // namespace addpoly
