#include "romdom/alpha.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "mpfr_util.hpp"
#include "romdom/errors.hpp"

namespace romdom {

using detail::Mpfr;

struct AlphaSpec::Impl {
  Kind kind = Kind::golden;
  // terms[0] == 0; when periodic, terms[1..] is the minimal repeating block.
  std::vector<long long> terms;
  bool periodic = true;
  mpq_class exact;  // value when !periodic
  double approx = 0.0;

  mutable std::mutex mutex;
  mutable std::map<unsigned, std::unique_ptr<Mpfr>> cache;

  long long term(std::size_t i) const {
    if (i == 0) return 0;
    const std::size_t period = terms.size() - 1;
    return terms[1 + (i - 1) % period];
  }

  // Approximation of alpha with |value - alpha| <= 2^(1 - bits).
  const Mpfr& value_at(unsigned bits) const {
    std::lock_guard lock(mutex);
    auto it = cache.find(bits);
    if (it != cache.end()) return *it->second;

    auto value = std::make_unique<Mpfr>(bits);
    switch (kind) {
      case Kind::golden:
        mpfr_sqrt_ui(value->get(), 5, MPFR_RNDN);
        mpfr_sub_ui(value->get(), value->get(), 1, MPFR_RNDN);
        mpfr_div_2ui(value->get(), value->get(), 1, MPFR_RNDN);
        break;
      case Kind::sqrt2m1:
        mpfr_sqrt_ui(value->get(), 2, MPFR_RNDN);
        mpfr_sub_ui(value->get(), value->get(), 1, MPFR_RNDN);
        break;
      case Kind::continued_fraction:
        if (!periodic) {
          mpfr_set_q(value->get(), exact.get_mpq_t(), MPFR_RNDN);
        } else {
          // Convergent h/k satisfies |alpha - h/k| < 1/k^2; stop once
          // k^2 > 2^(bits + 3).
          mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
          const std::size_t needed_bits = bits / 2 + 3;
          for (std::size_t i = 0;; ++i) {
            const mpz_class a = static_cast<long>(term(i));
            const mpz_class h = a * h_prev + h_prev2;
            const mpz_class k = a * k_prev + k_prev2;
            h_prev2 = h_prev;
            h_prev = h;
            k_prev2 = k_prev;
            k_prev = k;
            if (i > 0 && mpz_sizeinbase(k.get_mpz_t(), 2) > needed_bits) break;
          }
          const mpq_class convergent(h_prev, k_prev);
          mpfr_set_q(value->get(), convergent.get_mpq_t(), MPFR_RNDN);
        }
        break;
    }
    const Mpfr& ref = *value;
    cache.emplace(bits, std::move(value));
    return ref;
  }
};

namespace {

std::vector<long long> minimal_period(std::vector<long long> terms) {
  const std::size_t n = terms.size() - 1;
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = terms[1 + i] == terms[1 + i % p];
    if (ok) {
      terms.resize(1 + p);
      break;
    }
  }
  return terms;
}

std::shared_ptr<AlphaSpec::Impl> make_impl(AlphaSpec::Kind kind,
                                           std::vector<long long> terms,
                                           bool periodic) {
  auto impl = std::make_shared<AlphaSpec::Impl>();
  impl->kind = kind;
  impl->terms = std::move(terms);
  impl->periodic = periodic;
  if (!periodic) {
    // Evaluate the finite expansion from the back.
    mpq_class x = static_cast<long>(impl->terms.back());
    for (std::size_t i = impl->terms.size() - 1; i-- > 0;) {
      x = mpq_class(static_cast<long>(impl->terms[i])) + 1 / x;
    }
    x.canonicalize();
    impl->exact = x;
    impl->approx = x.get_d();
  } else {
    impl->approx = mpfr_get_d(impl->value_at(kDefaultPrecisionBits).get(),
                              MPFR_RNDN);
  }
  return impl;
}

void validate_terms(const std::vector<long long>& terms, bool periodic) {
  if (terms.size() < 2) {
    throw InvalidArgument("continued fraction needs the leading 0 and at least one more term");
  }
  if (terms[0] != 0) {
    throw InvalidArgument("continued fraction must start with 0 so that alpha lies in (0,1)");
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] < 1) {
      throw InvalidArgument("continued fraction terms after the first must be positive");
    }
  }
  if (!periodic && terms.size() == 2 && terms[1] == 1) {
    throw InvalidArgument("[0; 1] equals 1, which is outside (0,1)");
  }
}

int mpq_sign(const mpq_class& x) { return sgn(x); }

}  // namespace

AlphaSpec::AlphaSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

AlphaSpec AlphaSpec::golden() {
  static const std::shared_ptr<const Impl> impl =
      make_impl(Kind::golden, {0, 1}, true);
  return AlphaSpec(impl);
}

AlphaSpec AlphaSpec::sqrt2m1() {
  static const std::shared_ptr<const Impl> impl =
      make_impl(Kind::sqrt2m1, {0, 2}, true);
  return AlphaSpec(impl);
}

AlphaSpec AlphaSpec::continued_fraction(std::vector<long long> terms,
                                        bool periodic) {
  validate_terms(terms, periodic);
  if (periodic) terms = minimal_period(std::move(terms));
  return AlphaSpec(make_impl(Kind::continued_fraction, std::move(terms), periodic));
}

AlphaSpec AlphaSpec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "golden") return golden();
  if (text == "sqrt2m1") return sqrt2m1();
  if (text.starts_with("cf:")) {
    std::string_view rest = text.substr(3);
    std::vector<long long> terms;
    bool periodic = false;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = trim(rest.substr(0, comma));
      if (item == "...") {
        if (comma != std::string_view::npos) {
          throw InvalidArgument("'...' must be the last item of a continued fraction");
        }
        periodic = true;
        break;
      }
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw InvalidArgument("bad continued fraction term '" + std::string(item) +
                              "'; expected cf:0,a1,...,an[,...]");
      }
      terms.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return continued_fraction(std::move(terms), periodic);
  }
  if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text.front())) ||
                        text.front() == '.')) {
    throw InvalidArgument(
        "decimal alpha '" + std::string(text) +
        "' is rational and would break symbolic equality; use golden, sqrt2m1 "
        "or cf:0,a1,...,an,...");
  }
  throw InvalidArgument("unknown alpha '" + std::string(text) +
                        "'; expected golden, sqrt2m1 or cf:0,a1,...,an[,...]");
}

AlphaSpec AlphaSpec::with_precision(unsigned bits, unsigned max_bits) const {
  if (bits < kMinPrecisionBits) {
    throw InvalidArgument("precision must be at least " +
                          std::to_string(kMinPrecisionBits) + " bits");
  }
  if (max_bits < bits) {
    throw InvalidArgument("maximum precision is below the starting precision");
  }
  AlphaSpec copy = *this;
  copy.bits_ = bits;
  copy.max_bits_ = max_bits;
  return copy;
}

AlphaSpec::Kind AlphaSpec::kind() const noexcept { return impl_->kind; }

bool AlphaSpec::irrational() const noexcept { return impl_->periodic; }

std::string AlphaSpec::name() const {
  switch (impl_->kind) {
    case Kind::golden:
      return "golden";
    case Kind::sqrt2m1:
      return "sqrt2m1";
    case Kind::continued_fraction:
      break;
  }
  std::string out = "cf:";
  for (std::size_t i = 0; i < impl_->terms.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(impl_->terms[i]);
  }
  if (impl_->periodic) out += ",...";
  return out;
}

std::optional<long long> AlphaSpec::term(std::size_t i) const {
  if (!impl_->periodic && i >= impl_->terms.size()) return std::nullopt;
  return impl_->term(i);
}

double AlphaSpec::approx() const noexcept { return impl_->approx; }

int AlphaSpec::sign(const mpq_class& r, const mpq_class& c) const {
  if (c == 0) return mpq_sign(r);
  if (!impl_->periodic) return mpq_sign(r + c * impl_->exact);

  // Double fast path.
  const double rd = r.get_d();
  const double cd = c.get_d();
  if (std::abs(rd) < 1e15 && std::abs(cd) < 1e15) {
    const double v = rd + cd * impl_->approx;
    const double envelope = (std::abs(rd) + std::abs(cd) + 1.0) * 1e-13;
    if (std::abs(v) > envelope) return v > 0 ? 1 : -1;
  }

  for (unsigned bits = bits_;; bits = std::min(bits * 2, max_bits_)) {
    const Mpfr& a = impl_->value_at(bits);
    Mpfr v(bits + 8);
    Mpfr t(bits + 8);
    mpfr_set_q(v.get(), r.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_q(t.get(), a.get(), c.get_mpq_t(), MPFR_RNDN);
    mpfr_add(v.get(), v.get(), t.get(), MPFR_RNDN);

    // |error| <= 2^(3 - bits) * (|r| + 3|c| + 1); certify with a factor two.
    Mpfr bound(64);
    Mpfr tmp(64);
    mpfr_set_q(bound.get(), r.get_mpq_t(), MPFR_RNDU);
    mpfr_abs(bound.get(), bound.get(), MPFR_RNDU);
    mpfr_set_q(tmp.get(), c.get_mpq_t(), MPFR_RNDU);
    mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDU);
    mpfr_mul_ui(tmp.get(), tmp.get(), 3, MPFR_RNDU);
    mpfr_add(bound.get(), bound.get(), tmp.get(), MPFR_RNDU);
    mpfr_add_ui(bound.get(), bound.get(), 1, MPFR_RNDU);
    mpfr_mul_2si(bound.get(), bound.get(), 4 - static_cast<long>(bits), MPFR_RNDU);

    if (mpfr_cmpabs(v.get(), bound.get()) > 0) return mpfr_sgn(v.get()) > 0 ? 1 : -1;
    if (bits >= max_bits_) {
      throw PrecisionExhausted(
          "cannot certify the sign of " + r.get_str() + " + " + c.get_str() +
              "*alpha within " + std::to_string(max_bits_) + " bits",
          max_bits_);
    }
  }
}

mpz_class AlphaSpec::floor(const mpq_class& r, const mpq_class& c) const {
  auto floor_q = [](const mpq_class& x) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
  };
  if (c == 0) return floor_q(r);
  if (!impl_->periodic) return floor_q(r + c * impl_->exact);

  mpz_class n;
  const double guess = r.get_d() + c.get_d() * impl_->approx;
  if (std::isfinite(guess) && std::abs(guess) < 1e15) {
    n = static_cast<long>(std::floor(guess));
  } else {
    Mpfr v(bits_ + 64);
    Mpfr t(bits_ + 64);
    mpfr_set_q(v.get(), r.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_q(t.get(), impl_->value_at(bits_).get(), c.get_mpq_t(), MPFR_RNDN);
    mpfr_add(v.get(), v.get(), t.get(), MPFR_RNDN);
    mpfr_get_z(n.get_mpz_t(), v.get(), MPFR_RNDD);
  }
  while (sign(r - n, c) < 0) --n;
  while (sign(r - n - 1, c) >= 0) ++n;
  return n;
}

std::string AlphaSpec::decimal(const mpq_class& r, const mpq_class& c,
                               int digits) const {
  const unsigned bits = std::max(bits_, 128u);
  Mpfr v(bits);
  mpfr_set_q(v.get(), r.get_mpq_t(), MPFR_RNDN);
  if (c != 0) {
    Mpfr t(bits);
    if (impl_->periodic) {
      mpfr_mul_q(t.get(), impl_->value_at(bits).get(), c.get_mpq_t(), MPFR_RNDN);
    } else {
      const mpq_class product = c * impl_->exact;
      mpfr_set_q(t.get(), product.get_mpq_t(), MPFR_RNDN);
    }
    mpfr_add(v.get(), v.get(), t.get(), MPFR_RNDN);
  }
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, v.get());
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

bool AlphaSpec::same_number(const AlphaSpec& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return impl_->periodic == other.impl_->periodic && impl_->terms == other.impl_->terms;
}

}  // namespace romdom
