#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "romdom/alpha.hpp"
#include "romdom/qalpha.hpp"

namespace romdom {

// Point (p + q*alpha) mod 1 on R/Z with rational p and integer q.
//
// Canonical form keeps the real value p + q*alpha itself in [0,1), so two
// canonical points are equal exactly when (p, q) coincide.
class CirclePoint {
 public:
  CirclePoint() = default;  // the point 0

  static CirclePoint make(const mpq_class& p, long long q, const AlphaSpec& alpha);
  static CirclePoint rational(const mpq_class& p);
  static CirclePoint alpha_multiple(long long q, const AlphaSpec& alpha) {
    return make(0, q, alpha);
  }

  const mpq_class& p() const noexcept { return p_; }
  long long q() const noexcept { return q_; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  QAlpha value() const { return QAlpha(p_, mpq_class(static_cast<long>(q_))); }
  double approx(const AlphaSpec& alpha) const { return value().approx(alpha); }
  // Same grammar as labeling files: "p/q", "p/q+ka" or "p/q-ka".
  std::string to_string() const { return value().to_string(); }

  friend bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return a.q_ == b.q_ && a.p_ == b.p_;
  }

 private:
  CirclePoint(mpq_class p, long long q) : p_(std::move(p)), q_(q) {}

  mpq_class p_;
  long long q_ = 0;
};

// Orders canonical points by their value in [0,1). Equal only when
// symbolically identical.
std::strong_ordering point_compare(const CirclePoint& a, const CirclePoint& b,
                                   const AlphaSpec& alpha);

CirclePoint add(const CirclePoint& a, const CirclePoint& b, const AlphaSpec& alpha);
CirclePoint negate(const CirclePoint& a, const AlphaSpec& alpha);

// Half-open arc [start, end) traversed counterclockwise. start == end is the
// full circle; empty arcs do not exist.
struct Arc {
  CirclePoint start;
  CirclePoint end;

  static Arc full_circle() { return Arc{}; }
  bool is_full() const { return start == end; }
  QAlpha length(const AlphaSpec& alpha) const;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Finite disjoint union of half-open arcs with endpoints in Q + Z*alpha.
//
// Stored as sorted, pairwise disjoint, non-adjacent pieces [lo, hi) of the
// unit interval; an arc that wraps through 0 becomes two pieces. The
// representation is canonical, so set equality is a structural comparison.
class CircleSet {
 public:
  explicit CircleSet(AlphaSpec alpha);  // empty set

  static CircleSet empty(const AlphaSpec& alpha) { return CircleSet(alpha); }
  static CircleSet full(const AlphaSpec& alpha);
  // [start, end); throws InvalidArgument when start == end.
  static CircleSet arc(const CirclePoint& start, const CirclePoint& end,
                       const AlphaSpec& alpha);
  // Union of the given arcs, which may overlap.
  static CircleSet from_arcs(std::span<const Arc> arcs, const AlphaSpec& alpha);

  const AlphaSpec& alpha() const noexcept { return alpha_; }
  bool is_empty() const noexcept { return pieces_.empty(); }
  bool is_full() const;

  // Canonical arcs sorted by start; a wrapping arc comes last and the full
  // circle is the single arc [0, 0).
  std::vector<Arc> arcs() const;
  std::size_t arc_count() const;

  QAlpha measure() const;
  bool contains(const CirclePoint& x) const;

  std::string to_string() const;

  friend bool operator==(const CircleSet& a, const CircleSet& b);

  // Internal representation. hi == 0 stands for the right end 1.
  struct Piece {
    CirclePoint lo;
    CirclePoint hi;
    friend bool operator==(const Piece&, const Piece&) = default;
  };
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

 private:
  CircleSet(AlphaSpec alpha, std::vector<Piece> pieces);

  friend CircleSet unite(const CircleSet&, const CircleSet&);
  friend CircleSet intersect(const CircleSet&, const CircleSet&);
  friend CircleSet complement(const CircleSet&);

  AlphaSpec alpha_;
  std::vector<Piece> pieces_;
};

CircleSet translate(const CircleSet& s, const CirclePoint& delta);
CircleSet unite(const CircleSet& a, const CircleSet& b);
CircleSet intersect(const CircleSet& a, const CircleSet& b);
CircleSet difference(const CircleSet& a, const CircleSet& b);
CircleSet complement(const CircleSet& a);
CircleSet symmetric_difference(const CircleSet& a, const CircleSet& b);

}  // namespace romdom
