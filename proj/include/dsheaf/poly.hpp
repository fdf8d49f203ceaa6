#ifndef DSHEAF_POLY_HPP
#define DSHEAF_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dsheaf/field.hpp"

namespace dsheaf {

// Polynomial over F_q, coefficients low-to-high as Field element values.
// Canonical form: no trailing zeros; the zero polynomial is the empty
// vector and has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly one() { return Poly{{1}}; }
  static Poly variable() { return Poly{{0, 1}}; }  // T
  static Poly constant(int a) { return Poly{{a}}; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  const std::vector<int>& coeffs() const { return c_; }

  bool operator==(const Poly& other) const { return c_ == other.c_; }

 private:
  std::vector<int> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

// Canonical order: by degree, then by coefficients compared from the
// leading end down. For monic polynomials this is ascending order of the
// base-q integer encoding, so e.g. over F_2 the cubics sort
// T^3+T+1 < T^3+T^2+1.
bool poly_less(const Poly& a, const Poly& b);

Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, int s, const Poly& a);

// Quotient and remainder with deg r < deg g; throws domain_error when g = 0.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& g);
Poly poly_mod(const Field& f, const Poly& a, const Poly& g);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Field& f, const Poly& a, const Poly& b);

Poly poly_mulmod(const Field& f, const Poly& a, const Poly& b, const Poly& m);

// base^exp mod m by repeated squaring; exp >= 0.
Poly poly_powmod(const Field& f, const Poly& base, const Int& exp, const Poly& m);

int poly_eval(const Field& f, const Poly& a, int x);

// Rabin's criterion: f monic of degree n >= 1 is irreducible iff
// T^(q^n) = T mod f and gcd(f, T^(q^(n/l)) - T) = 1 for every prime l | n.
// Non-monic or constant input is a contract_violation.
bool is_irreducible(const Field& f, const Poly& poly);

// All monic irreducibles of the given degree in canonical order. The scan
// walks q^degree candidates, so both enumeration budgets apply.
std::vector<Poly> monic_irreducibles(const Field& f, int degree,
                                     const Budget& budget = Budget{});

// First `count` monic irreducibles of the given degree in canonical order,
// skipping any polynomial in `avoid`. Cheaper than a full enumeration; the
// candidate budget caps the number of polynomials examined.
std::vector<Poly> first_monic_irreducibles(const Field& f, int degree,
                                           int count,
                                           const std::vector<Poly>& avoid,
                                           const Budget& budget = Budget{});

// Text form, e.g. "T^3+T+1", "T+w^2", "2*T^2+1". parse_poly accepts the
// same grammar (plus '-' and whitespace) and throws domain_error on
// malformed input.
std::string poly_str(const Field& f, const Poly& a);
Poly parse_poly(const Field& f, const std::string& text);

}  // namespace dsheaf

#endif
