#pragma once

#include <optional>
#include <vector>

#include "pqs/mpoly.hpp"

namespace pqs {

/// Half-open interval (lo, hi] holding exactly one real root; lo == hi == *exact
/// when the root is rational and was hit during bisection.
struct IsolInterval {
  Rat lo, hi;
  std::optional<Rat> exact;
  bool operator==(const IsolInterval&) const = default;
};

/// Signs of f', f'', ..., f^{(deg f - 1)} at a root.
using ThomEncoding = std::vector<int>;

/// Real univariate representation: the point (g_i(a) / g0(a))_i at the root a
/// of f singled out by sigma.
struct RealURep {
  QPoly f;
  QPoly g0;
  std::vector<QPoly> g;
  ThomEncoding sigma;
  bool operator==(const RealURep&) const = default;
};

/// Sturm chain of a square-free polynomial, with exact root counting.
class SturmChain {
 public:
  explicit SturmChain(const QPoly& f);
  const QPoly& poly() const { return chain_.front(); }
  /// Sign variations at x.
  int variations(const Rat& x) const;
  int variations_neg_inf() const;
  int variations_pos_inf() const;
  /// Distinct real roots in (lo, hi].
  int count(const Rat& lo, const Rat& hi) const;
  int count_all() const;

 private:
  std::vector<QPoly> chain_;
};

/// A bound B with every real root in (-B, B).
Rat cauchy_root_bound(const QPoly& f);

/// One interval per distinct real root, in increasing order. Throws on f = 0.
std::vector<IsolInterval> isolate(const QPoly& f);

/// Bisects until hi - lo <= width (or the root is hit exactly). `sf` is the
/// square-free polynomial whose root is isolated.
IsolInterval refine_interval(const SturmChain& sf, IsolInterval iv, const Rat& width);

/// Roots of f with their Thom encodings.
std::vector<std::pair<IsolInterval, ThomEncoding>> thom(const QPoly& f);

/// Exact sign of h at the root of f isolated by `root`.
int sign_at(const QPoly& f, const IsolInterval& root, const QPoly& h);
/// Exact sign of h at the root of f with Thom encoding sigma.
int sign_at(const QPoly& f, const ThomEncoding& sigma, const QPoly& h);

/// Isolating interval of the root of f with Thom encoding sigma; throws
/// Error(Integrity) when no real root carries that encoding.
IsolInterval locate(const QPoly& f, const ThomEncoding& sigma);

/// Rational point within 2^{-bits} of the exact point in every coordinate.
std::vector<Rat> refine(const RealURep& rep, int bits);

/// Sign of h at the point denoted by rep (h over as many variables as rep.g).
int sign_at_point(const QMPoly& h, const RealURep& rep);

/// Interval enclosure of h over [lo, hi].
std::pair<Rat, Rat> eval_interval(const QPoly& h, const Rat& lo, const Rat& hi);

}  // namespace pqs
