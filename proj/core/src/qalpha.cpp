#include "romdom/qalpha.hpp"

#include <cctype>

#include "romdom/errors.hpp"

namespace romdom {

namespace {

mpq_class parse_rational(const std::string& text, std::string_view whole) {
  mpq_class out;
  const bool digits_ok =
      !text.empty() && text.find_first_not_of("+-0123456789/") == std::string::npos;
  if (!digits_ok || out.set_str(text, 10) != 0 || out.get_den() == 0) {
    throw InvalidArgument("bad rational '" + text + "' in '" + std::string(whole) + "'");
  }
  out.canonicalize();
  return out;
}

}  // namespace

std::string rational_string(const mpq_class& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string QAlpha::to_string() const {
  std::string out = rational_string(r_);
  if (c_ == 0) return out;
  out += c_ < 0 ? '-' : '+';
  const mpq_class magnitude = abs(c_);
  out += magnitude.get_den() == 1 ? magnitude.get_num().get_str()
                                  : rational_string(magnitude);
  out += 'a';
  return out;
}

QAlpha QAlpha::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw InvalidArgument("empty value");
  if (s.back() != 'a') return QAlpha(parse_rational(s, text));

  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  const auto split = s.find_last_of("+-");
  std::string rational_part;
  std::string coeff_part;
  if (split == std::string::npos || split == 0) {
    coeff_part = s;
  } else {
    rational_part = s.substr(0, split);
    coeff_part = s.substr(split);
  }
  if (coeff_part.empty() || coeff_part == "+" || coeff_part == "-") coeff_part += "1";
  if (coeff_part.front() == '+') coeff_part.erase(0, 1);
  const mpq_class r = rational_part.empty() ? mpq_class(0) : parse_rational(rational_part, text);
  return QAlpha(r, parse_rational(coeff_part, text));
}

}  // namespace romdom
