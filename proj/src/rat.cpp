#include "dsheaf/rat.hpp"

namespace dsheaf {

std::string rat_decimal4(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  Int scaled = num * 10000;
  Int q = scaled / den;
  Int rem = scaled % den;
  if (2 * rem >= den) ++q;
  std::string digits = Int(q / 10000).str() + ".";
  std::string frac = Int(q % 10000).str();
  digits += std::string(4 - frac.size(), '0') + frac;
  if (negative && q != 0) digits.insert(digits.begin(), '-');
  return digits;
}

namespace {

Int parse_int_strict(const std::string& text) {
  std::size_t start = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw domain_error("not a number: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw domain_error("not a number: '" + text + "'");
    }
  }
  return Int(text);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int_strict(text));
  Int num = parse_int_strict(text.substr(0, slash));
  Int den = parse_int_strict(text.substr(slash + 1));
  if (den == 0) throw domain_error("zero denominator: '" + text + "'");
  return Rat(num, den);
}

}  // namespace dsheaf
