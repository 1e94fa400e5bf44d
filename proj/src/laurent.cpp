#include "wcx/laurent.hpp"

#include <cctype>
#include <charconv>

#include "wcx/errors.hpp"

namespace wcx {

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (auto& [var, e] : m) {
    if (!out.empty()) out += '*';
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  Monomial m;
  if (text == "1") return m;
  std::size_t start = 0;
  while (start < text.size()) {
    auto star = text.find('*', start);
    auto factor = text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    auto caret = factor.find('^');
    std::string var(factor.substr(0, caret));
    if (var.empty() || !(std::isalpha(static_cast<unsigned char>(var[0])) || var[0] == '_'))
      throw InputError("bad monomial factor '" + std::string(factor) + "'");
    int e = 1;
    if (caret != std::string_view::npos) {
      auto es = factor.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
      if (ec != std::errc() || ptr != es.data() + es.size()) throw InputError("bad exponent in '" + std::string(factor) + "'");
    }
    if ((m[var] += e) == 0) m.erase(var);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return m;
}

Laurent::Laurent(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Laurent Laurent::variable(const std::string& name, int exponent) {
  Monomial m;
  if (exponent != 0) m[name] = exponent;
  return monomial(m);
}

Laurent Laurent::monomial(const Monomial& m, const Rational& c) {
  Laurent out;
  out.add_term(m, c);
  return out;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Laurent::constant_value() const {
  if (!is_constant()) throw InputError("Laurent: not a constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Laurent::is_unit() const { return terms_.size() == 1; }

Laurent Laurent::inverse() const {
  if (!is_unit()) throw InputError("Laurent: not invertible: " + to_string());
  Monomial m;
  for (auto& [var, e] : terms_.begin()->first) m[var] = -e;
  return monomial(m, Rational(1) / terms_.begin()->second);
}

Laurent Laurent::pow(int e) const {
  Laurent base = e < 0 ? inverse() : *this;
  Laurent out(1);
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
  return out;
}

void Laurent::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (auto& [var, e] : mb)
        if ((m[var] += e) == 0) m.erase(var);
      out.add_term(m, ca * cb);
    }
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent operator-(Laurent a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    if (m.empty()) {
      out += wcx::to_string(mag);
    } else {
      if (mag != 1) out += wcx::to_string(mag) + "*";
      out += wcx::to_string(m);
    }
  }
  return out;
}

Laurent Laurent::parse(std::string_view text) {
  Laurent out;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    // a term ends at the next '+' or '-' that is not an exponent sign
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '^')) ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw InputError("bad Laurent expression '" + std::string(text) + "'");
    Rational coef(1);
    std::string mono = term;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      auto star = term.find('*');
      coef = parse_rational(term.substr(0, star));
      mono = star == std::string::npos ? "1" : term.substr(star + 1);
    }
    out.add_term(parse_monomial(mono), coef * sign);
    i = j;
  }
  return out;
}

}  // namespace wcx
