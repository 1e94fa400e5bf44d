#include "wcx/ext_int.hpp"

#include <charconv>

#include "wcx/errors.hpp"
#include "wcx/rational.hpp"

namespace wcx {

long long ExtInt::value() const {
  if (!is_finite()) throw InputError("ExtInt: value() of an infinite bound");
  return value_;
}

std::string ExtInt::to_string() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    default: return std::to_string(value_);
  }
}

ExtInt ExtInt::parse(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "+infinity") return pos_inf();
  if (text == "-inf" || text == "-infinity") return neg_inf();
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InputError("not an extended integer: '" + std::string(text) + "'");
  return ExtInt(v);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw InputError("not a rational: '" + std::string(text) + "'");
    return Rational(BigInt(std::string(strip_plus(text))));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InputError("not a rational: '" + std::string(text) + "'");
  BigInt d(std::string(strip_plus(den)));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(std::string(strip_plus(num))), d);
}

}  // namespace wcx
