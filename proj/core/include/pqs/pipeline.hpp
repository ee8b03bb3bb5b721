#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pqs/algebra0d.hpp"
#include "pqs/problem.hpp"
#include "pqs/realroots.hpp"

namespace pqs {

enum class Mode { Symbolic, Hybrid };

struct PipelineConfig {
  Mode mode = Mode::Hybrid;
  bool assume_bounded = false;
  bool assume_nonneg = false;
  std::optional<Rat> rational_eps1;
  std::optional<Rat> rational_eps2;
  unsigned jobs = 1;
  unsigned seed = 1;
  std::size_t n_cap = 4096;
  long j_cap = -1;  // separating-form cap forwarded to candidate generation

  /// Throws Error(Input) on a non-positive fast-path value or zero jobs.
  void validate() const;
};

/// Substitution of a/b for eps0 together with the polynomials it was chosen for.
struct Eps0Certificate {
  bool applicable = false;
  std::vector<QPoly> test_polys;  // polynomials in eps0
  std::vector<Rat> bounds;        // Cauchy lower bound of each
  Rat value = 0;                  // a/b, strictly below every bound
  int halvings = 0;               // retries after a failed stability probe
};

enum class Status { Empty, Nonempty };

struct SampleReport {
  std::vector<RealURep> points;
  Status status = Status::Empty;
  std::size_t pieces_processed = 0;
  std::size_t candidates_pruned = 0;
  Eps0Certificate certificate;
};

/// The deformed system: p~ = Y0^2 + p (or p^2), Q0 = 1 - eps0^2 |X|^2,
/// Q~_j = Q_j + (t/2) X^T diag(1^j, ..., n~^j) X and level eps1. Without the
/// bounded stage X0, Y0 and Q0 are absent and the diagonal runs over 1..n.
struct Prepared {
  Problem prob;
  TowerPtr tower;
  bool has_eps0 = false;
  std::size_t symbolic_inner = 0;  // eps1 and eps2 still symbolic
  std::size_t r = 0;               // rank offset for the piece cover
};

Prepared prepare(const Problem& prob, const PipelineConfig& cfg);

/// |h_l| / sum |h_m| with l the lowest nonzero index; nullopt when h is constant.
std::optional<Rat> cauchy_lower_bound(const QPoly& h);

/// eps0 replaced by a value below every Cauchy bound of the test set, checked
/// by recomputing root counts, Thom encodings and test signs at a/b and a/(2b).
/// `reps` live over the tower (eps0); `composed` is p(Q(X)) over Q.
std::pair<std::vector<URep<Rat>>, Eps0Certificate> remove_eps0(const std::vector<URep<EpsScalar>>& reps,
                                                               const QMPoly& composed);

struct Verification {
  bool pass = false;
  std::string diagnostic;
};

/// p(Q(g / g0)) - level vanishes at the root of f singled out by the Thom encoding.
Verification verify_membership(const RealURep& rep, const Problem& prob);

/// Same point denoted by both representations.
bool same_point(const RealURep& a, const RealURep& b);

/// One representation per point, in canonical order.
std::vector<RealURep> dedup(std::vector<RealURep> reps);

/// Canonical order: f coefficients, then Thom encoding, then g0 and g.
bool rep_less(const RealURep& a, const RealURep& b);

/// Real points of a candidate (roots of f of multiplicity mu + 1 where g0 does
/// not vanish). Rational points are returned as (T, 1, x).
std::vector<RealURep> real_points(const URep<Rat>& u);

/// Real points of {F = 0, (X - c) parallel to grad F} for seeded rational
/// centres c: the closest point of every connected component of Z(F) to c.
/// Throws Error(Resource) when no tried system is zero-dimensional.
std::vector<RealURep> critical_sample(const QMPoly& F, unsigned seed);

SampleReport sample(const Problem& prob, const PipelineConfig& cfg);

struct Decision {
  Status status = Status::Empty;
  std::optional<RealURep> witness;
};

Decision decide(const Problem& prob, const PipelineConfig& cfg);

}  // namespace pqs
