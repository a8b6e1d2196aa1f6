#include "fairaudit/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace fairaudit {

namespace {

long long parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw std::invalid_argument("bad rational: '" + whole + "'");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational: '" + whole + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("bad rational: '" + whole + "'");
  return v;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    long long num = parse_int(s.substr(0, slash), text);
    long long den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rat(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string::npos) {
    bool negative = !s.empty() && s[0] == '-';
    std::string digits = s;
    digits.erase(dot, 1);
    if (negative) digits.erase(0, 1);
    if (digits.empty()) throw std::invalid_argument("bad rational: '" + text + "'");
    std::size_t frac_len = s.size() - dot - 1;
    if (frac_len > 18) throw std::invalid_argument("too many decimals: '" + text + "'");
    long long num = digits.empty() ? 0 : parse_int(digits, text);
    long long den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(negative ? -num : num, den);
  }

  return Rat(parse_int(s, text), 1);
}

std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace fairaudit
