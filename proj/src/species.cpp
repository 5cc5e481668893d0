#include "addpoly/species.hpp"

#include <algorithm>
#include <sstream>

namespace addpoly {

void trim_trailing_zeros(std::vector<std::size_t>& lambdas) {
  while (!lambdas.empty() && lambdas.back() == 0) lambdas.pop_back();
}

std::size_t Signature::reduced_dimension() const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < lambdas.size(); ++j) d += (j + 1) * lambdas[j];
  return d;
}

std::size_t Signature::blocks() const {
  std::size_t s = 0;
  for (auto l : lambdas) s += l;
  return s;
}

Species::Species(std::vector<Signature> entries) {
  for (auto& s : entries) {
    trim_trailing_zeros(s.lambdas);
    if (!s.lambdas.empty()) entries_.push_back(std::move(s));
  }
  std::sort(entries_.begin(), entries_.end());
}

std::size_t Species::dimension() const {
  std::size_t d = 0;
  for (const auto& s : entries_) d += s.dimension();
  return d;
}

std::string to_string(const Signature& s) {
  std::ostringstream os;
  os << "(" << s.m << ";";
  for (std::size_t j = 0; j < s.lambdas.size(); ++j) os << (j ? "," : "") << s.lambdas[j];
  os << ")";
  return os.str();
}

std::string to_string(const Species& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.entries().size(); ++i) out += (i ? "," : "") + to_string(s.entries()[i]);
  return out + "}";
}

}  // namespace addpoly
