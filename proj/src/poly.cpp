#include "dsheaf/poly.hpp"

#include <algorithm>
#include <cctype>

namespace dsheaf {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<int> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return Poly(std::move(out));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<int> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  }
  return Poly(std::move(out));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  std::vector<int> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly(std::move(out));
}

Poly poly_scale(const Field& f, int s, const Poly& a) {
  std::vector<int> out(a.coeffs());
  for (int& c : out) c = f.mul(s, c);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& g) {
  if (g.is_zero()) throw domain_error("polynomial division by zero");
  if (a.degree() < g.degree()) return {Poly::zero(), a};
  std::vector<int> rem(a.coeffs());
  std::vector<int> quot(a.degree() - g.degree() + 1, 0);
  int lead_inv = f.inv(g.coeffs().back());
  for (int i = a.degree(); i >= g.degree(); --i) {
    int c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - g.degree()] = c;
    for (int j = 0; j <= g.degree(); ++j) {
      rem[i - g.degree() + j] = f.sub(rem[i - g.degree() + j], f.mul(c, g.coeffs()[j]));
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& g) {
  return poly_divmod(f, a, g).second;
}

Poly poly_gcd(const Field& f, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(f, x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return poly_scale(f, f.inv(x.coeffs().back()), x);
}

Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m) {
  return poly_mod(f, poly_mul(f, a, b), m);
}

Poly poly_powmod(const Field& f, const Poly& base, const Int& exp, const Poly& m) {
  if (exp < 0) throw contract_violation("negative polynomial exponent");
  Poly result = poly_mod(f, Poly::one(), m);
  Poly b = poly_mod(f, base, m);
  Int e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result = poly_mulmod(f, result, b, m);
    b = poly_mulmod(f, b, b, m);
    e >>= 1;
  }
  return result;
}

int poly_eval(const Field& f, const Poly& a, int x) {
  int out = 0;
  for (int i = a.degree(); i >= 0; --i) out = f.add(f.mul(out, x), a.coeff(i));
  return out;
}

bool is_irreducible(const Field& f, const Poly& poly) {
  if (!poly.is_monic() || poly.degree() < 1) {
    throw contract_violation("irreducibility requires a monic nonconstant input");
  }
  int n = poly.degree();
  if (n == 1) return true;

  // Rabin: T^(q^n) = T mod poly and gcd(poly, T^(q^(n/l)) - T) = 1 for
  // every prime l dividing n. frob(k) computes T^(q^k) mod poly by
  // iterating the q-power map.
  auto frob = [&](int k) {
    Poly t = poly_mod(f, Poly::variable(), poly);
    for (int i = 0; i < k; ++i) t = poly_powmod(f, t, Int(f.q()), poly);
    return t;
  };
  if (!(frob(n) == poly_mod(f, Poly::variable(), poly))) return false;
  int rest = n;
  for (int l = 2; l <= rest; ++l) {
    if (rest % l != 0) continue;
    while (rest % l == 0) rest /= l;
    Poly diff = poly_sub(f, frob(n / l), Poly::variable());
    Poly g = poly_gcd(f, poly, poly_mod(f, diff, poly));
    if (g.degree() != 0) return false;
  }
  return true;
}

namespace {

Poly monic_from_value(const Field& f, int degree, std::int64_t value) {
  std::vector<int> coeffs(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    coeffs[i] = static_cast<int>(value % f.q());
    value /= f.q();
  }
  coeffs[degree] = 1;
  return Poly(std::move(coeffs));
}

void check_degree_budget(int degree, const Budget& budget) {
  if (degree < 1) throw contract_violation("enumeration degree must be >= 1");
  if (degree > budget.max_degree) {
    throw resource_error("enumeration degree " + std::to_string(degree) +
                         " exceeds budget (max_degree=" +
                         std::to_string(budget.max_degree) + ")");
  }
}

}  // namespace

std::vector<Poly> monic_irreducibles(const Field& f, int degree,
                                     const Budget& budget) {
  check_degree_budget(degree, budget);
  std::int64_t total = 1;
  for (int i = 0; i < degree; ++i) {
    total *= f.q();
    if (total > budget.max_candidates) {
      throw resource_error("enumeration of " + std::to_string(f.q()) + "^" +
                           std::to_string(degree) +
                           " candidates exceeds budget (max_candidates=" +
                           std::to_string(budget.max_candidates) + ")");
    }
  }
  std::vector<Poly> out;
  for (std::int64_t v = 0; v < total; ++v) {
    Poly candidate = monic_from_value(f, degree, v);
    if (is_irreducible(f, candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<Poly> first_monic_irreducibles(const Field& f, int degree, int count,
                                           const std::vector<Poly>& avoid,
                                           const Budget& budget) {
  check_degree_budget(degree, budget);
  std::vector<Poly> out;
  if (count <= 0) return out;
  std::int64_t total = 1;
  bool capped = false;
  for (int i = 0; i < degree && !capped; ++i) {
    total *= f.q();
    capped = total > budget.max_candidates;
  }
  std::int64_t examined = 0;
  for (std::int64_t v = 0; capped || v < total; ++v) {
    if (++examined > budget.max_candidates) {
      throw resource_error("irreducible search examined more than " +
                           std::to_string(budget.max_candidates) +
                           " candidates (max_candidates budget)");
    }
    Poly candidate = monic_from_value(f, degree, v);
    if (std::find(avoid.begin(), avoid.end(), candidate) != avoid.end()) continue;
    if (!is_irreducible(f, candidate)) continue;
    out.push_back(std::move(candidate));
    if (static_cast<int>(out.size()) == count) break;
  }
  return out;
}

std::string poly_str(const Field& f, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    int c = a.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += f.element_str(c);
      continue;
    }
    if (c != 1) out += f.element_str(c) + "*";
    out += i == 1 ? "T" : "T^" + std::to_string(i);
  }
  return out;
}

namespace {

constexpr int kMaxParsedDegree = 4096;

struct PolyParser {
  const Field& f;
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw domain_error("cannot parse polynomial '" + text + "': " + why);
  }

  int parse_number() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    long value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > kMaxParsedDegree * 16L) fail("number out of range");
    }
    return static_cast<int>(value);
  }

  // coefficient := digits | 'w' ['^' digits]
  int parse_coefficient() {
    skip_space();
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      if (f.e() == 1) fail("'w' notation needs a field with q = p^e, e > 1");
      int k = eat('^') ? parse_number() : 1;
      return f.generator_pow(k % (f.q() - 1));
    }
    int value = parse_number();
    if (f.e() == 1) return value % f.p();
    if (value >= f.q()) fail("coefficient value out of range");
    return value;
  }

  // term := coefficient ['*'] [var] | var, with var := 'T' ['^' digits]
  void parse_term(std::vector<int>& coeffs, bool negate) {
    skip_space();
    if (pos >= text.size()) fail("missing term");
    int coeff = 1;
    bool have_coeff = false;
    if (text[pos] != 'T') {
      coeff = parse_coefficient();
      have_coeff = true;
      eat('*');
    }
    int power = 0;
    skip_space();
    if (pos < text.size() && text[pos] == 'T') {
      ++pos;
      power = eat('^') ? parse_number() : 1;
      if (power > kMaxParsedDegree) fail("degree too large");
    } else if (!have_coeff) {
      fail("expected a term");
    }
    if (negate) coeff = f.neg(coeff);
    if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, 0);
    coeffs[power] = f.add(coeffs[power], coeff);
  }

  Poly parse() {
    std::vector<int> coeffs;
    bool negate = eat('-');
    parse_term(coeffs, negate);
    while (true) {
      skip_space();
      if (pos >= text.size()) break;
      if (eat('+')) {
        parse_term(coeffs, false);
      } else if (eat('-')) {
        parse_term(coeffs, true);
      } else {
        fail("unexpected character '" + std::string(1, text[pos]) + "'");
      }
    }
    return Poly(std::move(coeffs));
  }
};

}  // namespace

Poly parse_poly(const Field& f, const std::string& text) {
  PolyParser parser{f, text};
  return parser.parse();
}

}  // namespace dsheaf
