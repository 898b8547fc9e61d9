#include "polyspace/rational.hpp"

#include <cctype>

#include "polyspace/errors.hpp"

namespace polyspace {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer to_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = trim(s.substr(0, slash));
    const auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    Integer d = to_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(to_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    const bool whole_ok = whole.empty() || whole == "-" || whole == "+" || is_integer_literal(whole);
    if (!whole_ok || frac.empty() || !is_integer_literal(frac) || frac[0] == '-' || frac[0] == '+') {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    std::string digits;
    for (char c : whole) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
    }
    digits += frac;
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(Integer(digits, 10), den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (!is_integer_literal(s)) throw ParseError("malformed number '" + std::string(text) + "'");
  return Rational(to_integer(s));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace polyspace
