#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pqs/rat.hpp"

namespace pqs {

/// Ordered infinitesimals; position 0 is the largest (eps_1 >> eps_2 >> ...).
class InfTower {
 public:
  InfTower() = default;
  explicit InfTower(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of `name`, or -1.
  int find(const std::string& name) const;

  bool operator==(const InfTower& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using TowerPtr = std::shared_ptr<const InfTower>;

TowerPtr make_tower(std::vector<std::string> names);
/// The tower with the last `count` infinitesimals dropped.
TowerPtr shorten(const TowerPtr& t, std::size_t count);
/// The tower with `extra` appended (innermost).
TowerPtr extend(const TowerPtr& t, const std::vector<std::string>& extra);
std::size_t tower_size(const TowerPtr& t);
bool same_tower(const TowerPtr& a, const TowerPtr& b);

using Exps = std::vector<int>;

/// Exponent vector of an infinitesimal monomial.
struct OrderVec {
  Exps exponents;
  bool operator==(const OrderVec&) const = default;
};

enum class Cmp { LT, EQ, GT };

/// GT iff eps^a >> eps^b. Coordinates are read right to left: the innermost
/// infinitesimal dominates, and a smaller exponent means a larger monomial.
Cmp mono_cmp(const OrderVec& a, const OrderVec& b);
Cmp mono_cmp(const Exps& a, const Exps& b);

/// Element of Q[eps_1..eps_l]. Immutable-style value type; sparse terms kept
/// sorted lexicographically by exponent, no zero coefficients.
/// A scalar with an empty tower is a plain rational and mixes with any tower.
class EpsScalar {
 public:
  using Term = std::pair<Exps, Rat>;

  EpsScalar() = default;
  EpsScalar(const Rat& c);  // NOLINT(google-explicit-constructor)
  EpsScalar(long c) : EpsScalar(Rat(c)) {}  // NOLINT
  EpsScalar(int c) : EpsScalar(Rat(c)) {}   // NOLINT
  EpsScalar(const Rat& c, TowerPtr tower);
  EpsScalar(TowerPtr tower, std::vector<Term> terms);

  /// The infinitesimal at tower position i.
  static EpsScalar eps(TowerPtr tower, std::size_t i, int power = 1);
  static EpsScalar monomial(TowerPtr tower, Exps e, const Rat& c);

  const TowerPtr& tower() const { return tower_; }
  std::size_t tower_len() const { return tower_size(tower_); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// True when free of infinitesimals.
  bool is_rational() const;
  /// Value when is_rational(); throws otherwise.
  Rat rational() const;
  /// Degree in tower position i.
  int degree_in(std::size_t i) const;
  int min_degree_in(std::size_t i) const;

  /// Re-express over a longer tower whose prefix is this tower.
  EpsScalar lifted(const TowerPtr& to) const;

  EpsScalar operator-() const;
  EpsScalar& operator+=(const EpsScalar& o);
  EpsScalar& operator-=(const EpsScalar& o);
  EpsScalar& operator*=(const EpsScalar& o);
  EpsScalar& operator*=(const Rat& c);
  friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
  friend EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
  friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator*(EpsScalar a, const Rat& c) { return a *= c; }
  friend EpsScalar operator*(const Rat& c, EpsScalar a) { return a *= c; }
  bool operator==(const EpsScalar& o) const;
  bool operator!=(const EpsScalar& o) const { return !(*this == o); }

  EpsScalar pow(unsigned e) const;
  /// Exact quotient; throws Error(Domain) when `d` does not divide.
  EpsScalar exact_div(const EpsScalar& d) const;
  /// Substitute the rational `v` for tower position `i` (removed from the tower).
  EpsScalar substitute(std::size_t i, const Rat& v) const;

  std::string to_string() const;

 private:
  void normalize();
  friend TowerPtr common_tower(const EpsScalar& a, const EpsScalar& b);

  TowerPtr tower_;
  std::vector<Term> terms_;
};

TowerPtr common_tower(const EpsScalar& a, const EpsScalar& b);

/// (o(x), in(x)): exponent of the largest monomial and its coefficient.
std::pair<OrderVec, Rat> order_and_initial(const EpsScalar& x);

/// Substitutes 0 for the last `count` infinitesimals; ring homomorphism.
EpsScalar lim_inner(const EpsScalar& x, std::size_t count);

inline bool is_zero(const EpsScalar& x) { return x.is_zero(); }

}  // namespace pqs
