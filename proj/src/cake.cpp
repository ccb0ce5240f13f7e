#include "parasoc/cake.hpp"

#include <algorithm>

#include "parasoc/errors.hpp"

namespace parasoc {

namespace {

using Poly = std::vector<Rational>;

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational eval(const Poly& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

// Antiderivative with zero constant term.
Rational eval_antiderivative(const Poly& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i] / static_cast<int>(i + 1);
  return v * t;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  return d;
}

// Remainder of a divided by b (b nonzero, trimmed).
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Sign of x + y * sqrt(d) for d >= 0.
int sign_surd(const Rational& x, const Rational& y, const Rational& d) {
  const int sx = sign(x);
  const int sy = d == 0 ? 0 : sign(y);
  if (sy == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  const Rational lhs = x * x;
  const Rational rhs = y * y * d;
  if (lhs > rhs) return sx;
  if (lhs < rhs) return sy;
  return 0;
}

// Whether p >= 0 on [l, r]; p has degree at most 3.
bool nonnegative_on(const Poly& p, const Rational& l, const Rational& r) {
  if (p.empty()) return true;
  if (eval(p, l) < 0 || eval(p, r) < 0) return false;
  if (p.size() <= 2) return true;
  const Poly d = derivative(p);
  if (d.size() == 2) {
    const Rational t = -d[0] / d[1];
    return !(t > l && t < r) || eval(p, t) >= 0;
  }
  // Cubic: critical points t = A ± B sqrt(D) from the quadratic derivative; at a critical point
  // p(t) equals the remainder of p modulo p'.
  const Rational disc = d[1] * d[1] - 4 * d[2] * d[0];
  if (disc < 0) return true;
  const Rational A = -d[1] / (2 * d[2]);
  const Rational B = Rational(1) / (2 * d[2]);
  Poly rem = remainder(p, d);
  rem.resize(2, Rational(0));
  for (int s : {1, -1}) {
    const Rational y = B * s;
    const bool inside = sign_surd(A - l, y, disc) > 0 && sign_surd(r - A, -y, disc) > 0;
    if (inside && sign_surd(rem[0] + rem[1] * A, rem[1] * y, disc) < 0) return false;
  }
  return true;
}

bool perfect_square(const BigInt& x, BigInt& root) {
  if (x < 0) return false;
  root = boost::multiprecision::sqrt(x);
  return root * root == x;
}

constexpr unsigned kSqrtBits = 128;

}  // namespace

Rational cut_tolerance() { return Rational(BigInt(1), BigInt("1000000000000")); }
Rational fairness_tolerance() { return Rational(BigInt(1), BigInt("1000000000")); }

PiecewisePolyDensity::PiecewisePolyDensity(std::vector<DensityPiece> pieces, int max_degree)
    : pieces_(std::move(pieces)) {
  if (max_degree > 3) throw InputError("densities of degree above 3 are not supported");
  if (pieces_.empty()) throw InputError("density has no pieces");
  if (pieces_.front().left != 0 || pieces_.back().right != 1) {
    throw InputError("density pieces must cover [0, 1]");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    auto& p = pieces_[i];
    if (!(p.left < p.right)) throw InputError("density piece with empty or reversed interval");
    if (i > 0 && pieces_[i - 1].right != p.left) throw InputError("density pieces must be contiguous");
    trim(p.coeffs);
    const int deg = p.coeffs.empty() ? 0 : static_cast<int>(p.coeffs.size()) - 1;
    if (deg > max_degree) {
      throw InputError("density piece of degree " + std::to_string(deg) + " exceeds limit " +
                       std::to_string(max_degree));
    }
    degree_ = std::max(degree_, deg);
    if (!nonnegative_on(p.coeffs, p.left, p.right)) {
      throw InputError("density is negative on piece " + std::to_string(i));
    }
    total += eval_antiderivative(p.coeffs, p.right) - eval_antiderivative(p.coeffs, p.left);
  }
  if (total != 1) throw InputError("density integrates to " + to_string(total) + ", not 1");
}

PiecewisePolyDensity PiecewisePolyDensity::uniform() {
  return PiecewisePolyDensity({{Rational(0), Rational(1), {Rational(1)}}});
}

Rational PiecewisePolyDensity::integral(const Rational& a, const Rational& b) const {
  if (a < 0 || b > 1 || a > b) throw InputError("integration bounds outside [0, 1]");
  Rational total = 0;
  for (const auto& p : pieces_) {
    if (p.right <= a) continue;
    if (p.left >= b) break;
    const Rational lo = std::max(p.left, a);
    const Rational hi = std::min(p.right, b);
    total += eval_antiderivative(p.coeffs, hi) - eval_antiderivative(p.coeffs, lo);
  }
  return total;
}

Rational PiecewisePolyDensity::value_at(const Rational& t) const {
  for (const auto& p : pieces_) {
    if (t < p.right || (&p == &pieces_.back() && t <= p.right)) return eval(p.coeffs, t);
  }
  throw InputError("point outside [0, 1]");
}

Piece::Piece(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (iv.left < 0 || iv.right > 1) throw InputError("interval outside [0, 1]");
    if (!(iv.left < iv.right)) throw InputError("empty or reversed interval");
    if (i > 0 && intervals_[i - 1].right > iv.left) throw InputError("overlapping intervals");
  }
}

Piece Piece::whole() { return Piece({{Rational(0), Rational(1)}}); }

Rational measure(const PiecewisePolyDensity& f, const Piece& x) {
  Rational total = 0;
  for (const auto& iv : x.intervals()) total += f.integral(iv.left, iv.right);
  return total;
}

CutResult cut_query(const PiecewisePolyDensity& f, const Rational& a, const Rational& v) {
  if (a < 0 || a > 1) throw InputError("cut start outside [0, 1]");
  if (v < 0 || v > f.integral(a, Rational(1))) {
    throw InputError("cut value " + to_string(v) + " outside [0, measure([a, 1])]");
  }
  if (v == 0) return {a, a, a, true};

  Rational rem = v;
  for (const auto& p : f.pieces()) {
    if (p.right <= a) continue;
    const Rational s = std::max(p.left, a);
    const Rational mass = eval_antiderivative(p.coeffs, p.right) - eval_antiderivative(p.coeffs, s);
    if (mass < rem) {
      rem -= mass;
      continue;
    }
    const Poly& c = p.coeffs;
    // The piece carries positive mass, so G(x) = integral over [s, x] is strictly increasing.
    if (c.size() == 1) {
      const Rational x = s + rem / c[0];
      return {x, x, x, true};
    }
    const Rational base = eval_antiderivative(c, s);
    if (c.size() == 2) {
      // (c1/2) x^2 + c0 x - (base + rem) = 0; the root where f >= 0 is (-c0 + sqrt(D)) / c1.
      const Rational disc = c[0] * c[0] + 2 * c[1] * (base + rem);
      const BigInt num = boost::multiprecision::numerator(disc);
      const BigInt den = boost::multiprecision::denominator(disc);
      BigInt rn, rd;
      if (perfect_square(num, rn) && perfect_square(den, rd)) {
        const Rational x = (-c[0] + Rational(rn, rd)) / c[1];
        return {x, x, x, true};
      }
      // sqrt(num/den) = sqrt(num*den)/den, bracketed on a 2^-kSqrtBits grid.
      BigInt scale = 1;
      scale <<= kSqrtBits;
      const BigInt radicand = num * den * scale * scale;
      const BigInt floor_root = boost::multiprecision::sqrt(radicand);
      const Rational lo_root(floor_root, den * scale);
      const Rational hi_root(floor_root + 1, den * scale);
      Rational x1 = (-c[0] + lo_root) / c[1];
      Rational x2 = (-c[0] + hi_root) / c[1];
      if (x1 > x2) std::swap(x1, x2);
      x1 = std::max(x1, s);
      x2 = std::min(x2, p.right);
      return {x2, x1, x2, false};
    }
    // Degree 2 or 3: bisection on exact rationals.
    Rational lo = s, hi = p.right;
    const Rational tol = cut_tolerance() / 10;
    for (int iter = 0; iter < 400; ++iter) {
      const Rational excess = eval_antiderivative(c, hi) - base - rem;
      if (excess == 0) return {hi, hi, hi, true};
      if (excess <= tol) break;
      const Rational mid = (lo + hi) / 2;
      if (eval_antiderivative(c, mid) - base < rem) lo = mid;
      else hi = mid;
    }
    return {hi, lo, hi, false};
  }
  // Only reachable when v equals the full remaining mass up to rounding of the loop above.
  const Rational one(1);
  return {one, one, one, true};
}

void validate(const Division& div) {
  std::vector<Interval> all;
  for (const auto& piece : div.pieces) {
    if (piece.size() > div.delta) throw InputError("a player receives more than delta intervals");
    all.insert(all.end(), piece.intervals().begin(), piece.intervals().end());
  }
  if (static_cast<std::int64_t>(all.size()) >
      static_cast<std::int64_t>(div.gamma) * static_cast<std::int64_t>(div.pieces.size())) {
    throw InputError("division uses more than gamma * n intervals");
  }
  static_cast<void>(Piece(std::move(all)));  // rejects overlaps across players
}

FairnessReport check_fairness(const Division& div, std::span<const PiecewisePolyDensity> densities) {
  validate(div);
  const std::size_t n = div.pieces.size();
  if (densities.size() != n) throw DimensionError("one density per player required");
  FairnessReport rep;
  rep.epsilon = div.exact ? Rational(0) : fairness_tolerance();
  rep.values.assign(n, std::vector<Rational>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) rep.values[p][q] = measure(densities[p], div.pieces[q]);
  }
  const Rational share(1, static_cast<int>(n));
  const Rational& eps = rep.epsilon;
  rep.proportional = rep.envy_free = rep.equitable = rep.equitable_equal_values = true;
  for (std::size_t p = 0; p < n; ++p) {
    const Rational& own = rep.values[p][p];
    if (own < share - eps) rep.proportional = false;
    if (abs(own - share) > eps) rep.equitable = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (own < rep.values[p][q] - eps) rep.envy_free = false;
      if (abs(own - rep.values[q][q]) > eps) rep.equitable_equal_values = false;
    }
  }
  return rep;
}

Rational welfare(const Division& div, std::span<const PiecewisePolyDensity> densities,
                 WelfareKind kind) {
  validate(div);
  if (densities.size() != div.pieces.size()) throw DimensionError("one density per player required");
  Rational total = 0;
  Rational lowest = 1;
  for (std::size_t p = 0; p < div.pieces.size(); ++p) {
    const Rational v = measure(densities[p], div.pieces[p]);
    total += v;
    lowest = std::min(lowest, v);
  }
  return kind == WelfareKind::utilitarian ? total : lowest;
}

namespace {

Piece interval_piece(const Rational& l, const Rational& r) {
  if (!(l < r)) return Piece();
  return Piece({{l, r}});
}

}  // namespace

Division cut_and_choose(std::span<const PiecewisePolyDensity> densities) {
  if (densities.size() != 2) throw InputError("cut and choose needs exactly two players");
  const CutResult cut = cut_query(densities[0], Rational(0), Rational(1, 2));
  const Piece left = interval_piece(Rational(0), cut.x);
  const Piece right = interval_piece(cut.x, Rational(1));
  const bool chooser_takes_left = measure(densities[1], left) >= measure(densities[1], right);
  Division div;
  div.exact = cut.exact;
  div.pieces = chooser_takes_left ? std::vector<Piece>{right, left} : std::vector<Piece>{left, right};
  return div;
}

Division last_diminisher(std::span<const PiecewisePolyDensity> densities) {
  const int n = static_cast<int>(densities.size());
  if (n < 2) throw InputError("last diminisher needs at least two players");
  const Rational share(1, n);
  Division div;
  div.pieces.resize(n);
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  Rational a = 0;
  while (active.size() > 1) {
    CutResult cut = cut_query(densities[active[0]], a, share);
    std::size_t last = 0;
    for (std::size_t j = 1; j < active.size(); ++j) {
      if (densities[active[j]].integral(a, cut.x) > share) {
        cut = cut_query(densities[active[j]], a, share);
        last = j;
      }
    }
    div.exact = div.exact && cut.exact;
    div.pieces[active[last]] = interval_piece(a, cut.x);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
    a = cut.x;
  }
  div.pieces[active[0]] = interval_piece(a, Rational(1));
  return div;
}

}  // namespace parasoc
