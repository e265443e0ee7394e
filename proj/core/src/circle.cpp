#include "romdom/circle.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "romdom/errors.hpp"

namespace romdom {

namespace {

using Piece = CircleSet::Piece;

int cmp(const CirclePoint& a, const CirclePoint& b, const AlphaSpec& alpha) {
  const auto order = point_compare(a, b, alpha);
  if (order < 0) return -1;
  if (order > 0) return 1;
  return 0;
}

// Piece right ends use 0 for the value 1.
int cmp_hi_lo(const CirclePoint& hi, const CirclePoint& lo, const AlphaSpec& alpha) {
  if (hi.is_zero()) return 1;
  return cmp(hi, lo, alpha);
}

int cmp_hi_hi(const CirclePoint& a, const CirclePoint& b, const AlphaSpec& alpha) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return 0;
    return a.is_zero() ? 1 : -1;
  }
  return cmp(a, b, alpha);
}

QAlpha hi_value(const CirclePoint& hi) {
  return hi.is_zero() ? QAlpha(1) : hi.value();
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw InvalidArgument("alpha coefficient overflow");
  }
  return out;
}

void sort_by_lo(std::vector<Piece>& pieces, const AlphaSpec& alpha) {
  std::sort(pieces.begin(), pieces.end(), [&](const Piece& x, const Piece& y) {
    return cmp(x.lo, y.lo, alpha) < 0;
  });
}

// Merges overlapping or touching pieces of a list sorted by lo.
std::vector<Piece> coalesce(std::vector<Piece> sorted, const AlphaSpec& alpha) {
  std::vector<Piece> out;
  out.reserve(sorted.size());
  for (auto& piece : sorted) {
    if (!out.empty() && cmp_hi_lo(out.back().hi, piece.lo, alpha) >= 0) {
      if (cmp_hi_hi(piece.hi, out.back().hi, alpha) > 0) out.back().hi = std::move(piece.hi);
      continue;
    }
    out.push_back(std::move(piece));
  }
  return out;
}

void require_same_alpha(const CircleSet& a, const CircleSet& b) {
  if (!a.alpha().same_number(b.alpha())) {
    throw InvalidArgument("circle sets built over different alpha values");
  }
}

}  // namespace

CirclePoint CirclePoint::make(const mpq_class& p, long long q, const AlphaSpec& alpha) {
  if (q != 0 && !alpha.irrational()) {
    throw InvalidArgument("alpha-linear points need an irrational alpha");
  }
  mpq_class reduced = p;
  reduced.canonicalize();
  reduced -= alpha.floor(reduced, mpq_class(static_cast<long>(q)));
  return CirclePoint(std::move(reduced), q);
}

CirclePoint CirclePoint::rational(const mpq_class& p) {
  mpq_class reduced = p;
  reduced.canonicalize();
  mpz_class shift;
  mpz_fdiv_q(shift.get_mpz_t(), reduced.get_num_mpz_t(), reduced.get_den_mpz_t());
  reduced -= shift;
  return CirclePoint(std::move(reduced), 0);
}

std::strong_ordering point_compare(const CirclePoint& a, const CirclePoint& b,
                                   const AlphaSpec& alpha) {
  if (a == b) return std::strong_ordering::equal;
  const mpq_class dp = a.p() - b.p();
  const mpq_class dq = mpq_class(static_cast<long>(a.q())) - static_cast<long>(b.q());
  const int s = alpha.sign(dp, dq);
  if (s == 0) {
    throw InvalidArgument("distinct symbolic points " + a.to_string() + " and " +
                          b.to_string() + " coincide numerically; alpha is rational");
  }
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

CirclePoint add(const CirclePoint& a, const CirclePoint& b, const AlphaSpec& alpha) {
  return CirclePoint::make(a.p() + b.p(), checked_add(a.q(), b.q()), alpha);
}

CirclePoint negate(const CirclePoint& a, const AlphaSpec& alpha) {
  if (a.q() == std::numeric_limits<long long>::min()) {
    throw InvalidArgument("alpha coefficient overflow");
  }
  return CirclePoint::make(-a.p(), -a.q(), alpha);
}

QAlpha Arc::length(const AlphaSpec& alpha) const {
  if (is_full()) return QAlpha(1);
  QAlpha len = end.value() - start.value();
  if (cmp(end, start, alpha) < 0) len += QAlpha(1);
  return len;
}

CircleSet::CircleSet(AlphaSpec alpha) : alpha_(std::move(alpha)) {
  if (!alpha_.irrational()) {
    throw InvalidArgument("circle sets need an irrational alpha, got " + alpha_.name());
  }
}

CircleSet::CircleSet(AlphaSpec alpha, std::vector<Piece> pieces)
    : alpha_(std::move(alpha)), pieces_(std::move(pieces)) {}

CircleSet CircleSet::full(const AlphaSpec& alpha) {
  CircleSet out(alpha);
  out.pieces_.push_back(Piece{CirclePoint{}, CirclePoint{}});
  return out;
}

CircleSet CircleSet::arc(const CirclePoint& start, const CirclePoint& end,
                         const AlphaSpec& alpha) {
  if (start == end) {
    throw InvalidArgument("arc [" + start.to_string() + ", " + end.to_string() +
                          ") is empty; use CircleSet::full for the whole circle");
  }
  const Arc a{start, end};
  return from_arcs(std::span<const Arc>(&a, 1), alpha);
}

CircleSet CircleSet::from_arcs(std::span<const Arc> arcs, const AlphaSpec& alpha) {
  CircleSet out(alpha);
  std::vector<Piece> pieces;
  pieces.reserve(arcs.size() + 1);
  for (const Arc& a : arcs) {
    if (a.is_full()) return full(alpha);
    if (cmp(a.start, a.end, alpha) < 0) {
      pieces.push_back(Piece{a.start, a.end});
    } else {
      pieces.push_back(Piece{a.start, CirclePoint{}});
      if (!a.end.is_zero()) pieces.push_back(Piece{CirclePoint{}, a.end});
    }
  }
  sort_by_lo(pieces, alpha);
  out.pieces_ = coalesce(std::move(pieces), alpha);
  return out;
}

bool CircleSet::is_full() const {
  return pieces_.size() == 1 && pieces_[0].lo.is_zero() && pieces_[0].hi.is_zero();
}

std::vector<Arc> CircleSet::arcs() const {
  std::vector<Arc> out;
  if (pieces_.empty()) return out;
  if (is_full()) return {Arc::full_circle()};
  const bool wraps = pieces_.size() >= 2 && pieces_.front().lo.is_zero() &&
                     pieces_.back().hi.is_zero();
  const std::size_t first = wraps ? 1 : 0;
  const std::size_t last = wraps ? pieces_.size() - 1 : pieces_.size();
  for (std::size_t i = first; i < last; ++i) out.push_back(Arc{pieces_[i].lo, pieces_[i].hi});
  if (wraps) out.push_back(Arc{pieces_.back().lo, pieces_.front().hi});
  return out;
}

std::size_t CircleSet::arc_count() const {
  if (pieces_.size() >= 2 && pieces_.front().lo.is_zero() && pieces_.back().hi.is_zero()) {
    return pieces_.size() - 1;
  }
  return pieces_.size();
}

QAlpha CircleSet::measure() const {
  QAlpha total;
  for (const Piece& piece : pieces_) total += hi_value(piece.hi) - piece.lo.value();
  return total;
}

bool CircleSet::contains(const CirclePoint& x) const {
  // First piece whose lo exceeds x; the candidate is the one before it.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [&](const CirclePoint& v, const Piece& piece) {
                               return cmp(v, piece.lo, alpha_) < 0;
                             });
  if (it == pieces_.begin()) return false;
  --it;
  return cmp_hi_lo(it->hi, x, alpha_) > 0;
}

std::string CircleSet::to_string() const {
  if (pieces_.empty()) return "empty";
  if (is_full()) return "full";
  std::string out;
  for (const Arc& a : arcs()) {
    if (!out.empty()) out += ' ';
    out += '[' + a.start.to_string() + ", " + a.end.to_string() + ')';
  }
  return out;
}

bool operator==(const CircleSet& a, const CircleSet& b) {
  return a.alpha_.same_number(b.alpha_) && a.pieces_ == b.pieces_;
}

CircleSet translate(const CircleSet& s, const CirclePoint& delta) {
  if (delta.is_zero() || s.is_empty() || s.is_full()) return s;
  const AlphaSpec& alpha = s.alpha();
  std::vector<Arc> shifted;
  for (const Arc& a : s.arcs()) {
    shifted.push_back(Arc{add(a.start, delta, alpha), add(a.end, delta, alpha)});
  }
  return CircleSet::from_arcs(shifted, alpha);
}

CircleSet unite(const CircleSet& a, const CircleSet& b) {
  require_same_alpha(a, b);
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  const AlphaSpec& alpha = a.alpha_;
  std::vector<Piece> merged;
  merged.reserve(a.pieces_.size() + b.pieces_.size());
  std::merge(a.pieces_.begin(), a.pieces_.end(), b.pieces_.begin(), b.pieces_.end(),
             std::back_inserter(merged), [&](const Piece& x, const Piece& y) {
               return cmp(x.lo, y.lo, alpha) < 0;
             });
  return CircleSet(alpha, coalesce(std::move(merged), alpha));
}

CircleSet intersect(const CircleSet& a, const CircleSet& b) {
  require_same_alpha(a, b);
  const AlphaSpec& alpha = a.alpha_;
  std::vector<Piece> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.pieces_.size() && j < b.pieces_.size()) {
    const Piece& x = a.pieces_[i];
    const Piece& y = b.pieces_[j];
    const CirclePoint& lo = cmp(x.lo, y.lo, alpha) >= 0 ? x.lo : y.lo;
    const int hi_order = cmp_hi_hi(x.hi, y.hi, alpha);
    const CirclePoint& hi = hi_order <= 0 ? x.hi : y.hi;
    if (cmp_hi_lo(hi, lo, alpha) > 0) out.push_back(Piece{lo, hi});
    if (hi_order <= 0) ++i;
    if (hi_order >= 0) ++j;
  }
  return CircleSet(alpha, coalesce(std::move(out), alpha));
}

CircleSet complement(const CircleSet& a) {
  std::vector<Piece> out;
  CirclePoint cursor;
  for (const Piece& piece : a.pieces_) {
    if (!(piece.lo == cursor)) out.push_back(Piece{cursor, piece.lo});
    if (piece.hi.is_zero()) return CircleSet(a.alpha_, std::move(out));
    cursor = piece.hi;
  }
  out.push_back(Piece{cursor, CirclePoint{}});
  return CircleSet(a.alpha_, std::move(out));
}

CircleSet difference(const CircleSet& a, const CircleSet& b) {
  return intersect(a, complement(b));
}

CircleSet symmetric_difference(const CircleSet& a, const CircleSet& b) {
  return unite(difference(a, b), difference(b, a));
}

}  // namespace romdom
