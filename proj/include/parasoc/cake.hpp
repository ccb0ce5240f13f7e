#pragma once

#include <optional>
#include <span>
#include <vector>

#include "parasoc/rational.hpp"

namespace parasoc {

/// Closed-open subinterval [left, right) of the cake [0, 1].
struct Interval {
  Rational left;
  Rational right;
};

/// One polynomial piece of a density: f(t) = sum_i coeffs[i] * t^i on [left, right).
struct DensityPiece {
  Rational left;
  Rational right;
  std::vector<Rational> coeffs;
};

/// Piecewise-polynomial value density on [0, 1]. The constructor rejects densities whose pieces
/// do not partition [0, 1], that are negative anywhere, whose degree exceeds `max_degree`
/// (at most 3), or whose integral is not exactly 1.
class PiecewisePolyDensity {
 public:
  explicit PiecewisePolyDensity(std::vector<DensityPiece> pieces, int max_degree = 3);

  static PiecewisePolyDensity uniform();

  const std::vector<DensityPiece>& pieces() const noexcept { return pieces_; }
  int num_pieces() const noexcept { return static_cast<int>(pieces_.size()); }  // alpha
  int degree() const noexcept { return degree_; }                                 // beta
  /// Integral over [a, b] for 0 <= a <= b <= 1.
  Rational integral(const Rational& a, const Rational& b) const;
  Rational value_at(const Rational& t) const;

 private:
  std::vector<DensityPiece> pieces_;
  int degree_ = 0;
};

/// Finite union of disjoint intervals.
class Piece {
 public:
  Piece() = default;
  /// Throws InputError on empty, reversed, out-of-range or overlapping intervals.
  explicit Piece(std::vector<Interval> intervals);
  static Piece whole();

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  int size() const noexcept { return static_cast<int>(intervals_.size()); }

 private:
  std::vector<Interval> intervals_;  // sorted by left end
};

Rational measure(const PiecewisePolyDensity& f, const Piece& x);

struct CutResult {
  Rational x;  // returned cut point, equal to `upper`
  Rational lower;
  Rational upper;
  bool exact = true;  // x is the exact cut point
};

/// Smallest x in [a, 1] with measure([a, x]) = v. Exact for densities that are constant on the
/// relevant piece and for linear pieces whose root is rational; otherwise x is the upper end of a
/// rational bracket and measure([a, x]) - v lies in [0, 1e-12]. Throws InputError when v is out of
/// range.
CutResult cut_query(const PiecewisePolyDensity& f, const Rational& a, const Rational& v);

/// One piece per player plus the declared complexity bounds.
struct Division {
  std::vector<Piece> pieces;
  int gamma = 1;  // at most gamma * n intervals altogether
  int delta = 1;  // at most delta intervals per player
  bool exact = true;  // every endpoint is an exact cut point
};

/// Throws InputError when players' pieces overlap or the gamma/delta bounds are exceeded.
void validate(const Division& div);

struct FairnessReport {
  std::vector<std::vector<Rational>> values;  // values[p][q] = mu_p(piece of q)
  Rational epsilon;
  bool proportional = false;
  bool envy_free = false;
  bool equitable = false;               // every player values its piece at 1/n
  bool equitable_equal_values = false;  // all players value their own pieces equally
};

/// Tolerance is 0 for exact divisions and 1e-9 otherwise.
FairnessReport check_fairness(const Division& div, std::span<const PiecewisePolyDensity> densities);

enum class WelfareKind { utilitarian, egalitarian };

Rational welfare(const Division& div, std::span<const PiecewisePolyDensity> densities,
                 WelfareKind kind);

/// Player 0 halves the cake by its own measure, player 1 picks (ties go to the left half).
Division cut_and_choose(std::span<const PiecewisePolyDensity> densities);

/// Banach-Knaster last diminisher: one contiguous interval per player, proportional.
Division last_diminisher(std::span<const PiecewisePolyDensity> densities);

/// 1e-12 and 1e-9 as rationals.
Rational cut_tolerance();
Rational fairness_tolerance();

}  // namespace parasoc
