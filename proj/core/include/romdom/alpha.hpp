#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace romdom {

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMaxPrecisionBits = 16384;
inline constexpr unsigned kMinPrecisionBits = 16;

// The rotation number alpha in (0,1).
//
// Alpha is never a bare decimal. It is either a named quadratic irrational or
// a continued fraction [0; a1, a2, ...]. A periodic continued fraction repeats
// a1..an forever and is irrational; a finite one is an exact rational and is
// flagged as such. Symbolic equality of circle points is only sound for
// irrational alpha.
//
// All numeric questions about r + c*alpha go through sign(), which starts at
// precision_bits() and doubles the working precision until the sign is
// certified, throwing PrecisionExhausted past max_precision_bits().
class AlphaSpec {
 public:
  enum class Kind { golden, sqrt2m1, continued_fraction };

  // (sqrt(5) - 1) / 2 = [0; 1, 1, 1, ...]
  static AlphaSpec golden();
  // sqrt(2) - 1 = [0; 2, 2, 2, ...]
  static AlphaSpec sqrt2m1();
  // terms = {0, a1, ..., an}. When periodic, a1..an repeat forever.
  static AlphaSpec continued_fraction(std::vector<long long> terms,
                                      bool periodic);
  // Accepts "golden", "sqrt2m1" and "cf:0,a1,...,an[,...]"; a trailing "..."
  // marks the expansion as periodic. Decimals are rejected.
  static AlphaSpec parse(std::string_view text);

  AlphaSpec with_precision(unsigned bits,
                           unsigned max_bits = kMaxPrecisionBits) const;

  Kind kind() const noexcept;
  bool irrational() const noexcept;
  unsigned precision_bits() const noexcept { return bits_; }
  unsigned max_precision_bits() const noexcept { return max_bits_; }
  std::string name() const;

  // Continued-fraction term i (term 0 is always 0). Returns nullopt past the
  // end of a finite expansion.
  std::optional<long long> term(std::size_t i) const;

  double approx() const noexcept;

  // Certified sign of r + c * alpha.
  int sign(const mpq_class& r, const mpq_class& c) const;
  // floor(r + c * alpha), exact.
  mpz_class floor(const mpq_class& r, const mpq_class& c) const;
  // r + c * alpha to `digits` significant decimal digits.
  std::string decimal(const mpq_class& r, const mpq_class& c,
                      int digits = 12) const;

  // Identity of the number, ignoring precision settings.
  bool same_number(const AlphaSpec& other) const noexcept;

  struct Impl;

 private:
  explicit AlphaSpec(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
  unsigned bits_ = kDefaultPrecisionBits;
  unsigned max_bits_ = kMaxPrecisionBits;
};

}  // namespace romdom
