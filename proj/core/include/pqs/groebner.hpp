#pragma once

#include <cstddef>
#include <vector>

#include "pqs/algebra0d.hpp"
#include "pqs/mpoly.hpp"

namespace pqs {

/// Monomial orders for Groebner computations. Elim0 compares the exponent of
/// variable 0 first and breaks ties by grevlex on the rest.
enum class MonoOrder { Grevlex, Elim0 };

/// True when a > b in `ord`.
bool mono_greater(const Mono& a, const Mono& b, MonoOrder ord);

/// Leading monomial of a nonzero polynomial.
Mono leading_mono(const QMPoly& f, MonoOrder ord);

/// Reduced Groebner basis (monic, sorted by leading monomial) of the ideal
/// generated by `gens`; {1} for the unit ideal, {} for the zero ideal.
std::vector<QMPoly> groebner_basis(const std::vector<QMPoly>& gens, MonoOrder ord = MonoOrder::Grevlex);

/// Remainder of f on division by a Groebner basis.
QMPoly normal_form(const QMPoly& f, const std::vector<QMPoly>& G, MonoOrder ord = MonoOrder::Grevlex);

/// Every variable has a pure power among the leading monomials.
bool zero_dimensional(const std::vector<QMPoly>& G, MonoOrder ord = MonoOrder::Grevlex);

/// Monomials outside the leading-term ideal of a zero-dimensional basis.
std::vector<Mono> staircase(const std::vector<QMPoly>& G, MonoOrder ord = MonoOrder::Grevlex);

/// Exact quotient a / b; throws Error(Domain) when b does not divide a.
QMPoly exact_divide(const QMPoly& a, const QMPoly& b);

/// Greatest common divisor with a positive grevlex leading coefficient
/// normalised to 1; gcd(0, 0) = 0.
QMPoly mgcd(const QMPoly& a, const QMPoly& b);

/// f divided by gcd(f, df/dX_1, ..., df/dX_n).
QMPoly msqfree_part(const QMPoly& f);

/// Q[X]/I for a zero-dimensional grevlex Groebner basis of I, in the
/// staircase basis.
class GroebnerAlgebra : public MonoAlgebra<Rat> {
 public:
  GroebnerAlgebra(std::size_t nvars, std::vector<QMPoly> G);
  const std::vector<QMPoly>& groebner() const { return G_; }
  Rat scale_base() const override { return Rat(1); }
  bool scaled_basis() const override { return false; }

  /// Rank of the Hermite form Tr(e_a e_b): the number of distinct complex points.
  std::size_t distinct_points() const;

 protected:
  std::vector<Rat> compute_product(const Mono& gamma) const override;

 private:
  std::vector<Rat> coords_of(const QMPoly& r) const;

  std::vector<QMPoly> G_;
  int border_degree_ = 0;
};

}  // namespace pqs
