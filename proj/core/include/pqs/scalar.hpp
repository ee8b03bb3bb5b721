#pragma once

#include <string>

#include "pqs/eps.hpp"
#include "pqs/errors.hpp"
#include "pqs/rat.hpp"

namespace pqs {

// Uniform helpers over the two coefficient rings, Rat and EpsScalar.

inline Rat exact_quo(const Rat& a, const Rat& b) {
  require(!is_zero(b), ErrorKind::Domain, "division by zero");
  return a / b;
}
inline EpsScalar exact_quo(const EpsScalar& a, const EpsScalar& b) { return a.exact_div(b); }

inline std::string scalar_string(const Rat& x) { return to_string(x); }
inline std::string scalar_string(const EpsScalar& x) { return x.to_string(); }

template <class C>
C scalar_one();
template <>
inline Rat scalar_one<Rat>() { return Rat(1); }
template <>
inline EpsScalar scalar_one<EpsScalar>() { return EpsScalar(Rat(1)); }

}  // namespace pqs
