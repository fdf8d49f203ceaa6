#include "dsheaf/places.hpp"

#include <algorithm>
#include <cctype>

namespace dsheaf {

Place Place::infinity() {
  Place x;
  x.infinity_ = true;
  x.degree_ = 1;
  return x;
}

Place Place::finite(const Field& f, Poly poly) {
  if (!poly.is_monic() || poly.degree() < 1) {
    throw domain_error("a finite place needs a monic nonconstant polynomial, got '" +
                       poly_str(f, poly) + "'");
  }
  if (!is_irreducible(f, poly)) {
    throw domain_error("'" + poly_str(f, poly) + "' is not irreducible over F_" +
                       std::to_string(f.q()));
  }
  Place x;
  x.degree_ = poly.degree();
  x.poly_ = std::move(poly);
  return x;
}

const Poly& Place::poly() const {
  if (infinity_) throw contract_violation("infinity has no polynomial");
  return poly_;
}

Int residue_size(const Field& f, const Place& x) {
  return pow_int(Int(f.q()), static_cast<unsigned>(x.degree()));
}

bool place_less(const Place& a, const Place& b) {
  if (a.is_infinity() != b.is_infinity()) return a.is_infinity();
  if (a.is_infinity()) return false;
  return poly_less(a.poly(), b.poly());
}

std::string place_str(const Field& f, const Place& x) {
  if (x.is_infinity()) return "inf";
  return poly_str(f, x.poly());
}

Place parse_place(const Field& f, const std::string& text) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed == "inf") return Place::infinity();
  return Place::finite(f, parse_poly(f, text));
}

PlaceSet make_place_set(const Field& f, std::vector<Place> places) {
  std::sort(places.begin(), places.end(), place_less);
  for (std::size_t i = 1; i < places.size(); ++i) {
    if (places[i] == places[i - 1]) {
      throw domain_error("duplicate place '" + place_str(f, places[i]) + "'");
    }
  }
  return places;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return result;
}

}  // namespace

Int count_places_of_degree(const Field& f, int d) {
  if (d < 1) throw contract_violation("place degree must be >= 1");
  Int sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    sum += mobius(e) * pow_int(Int(f.q()), static_cast<unsigned>(d / e));
  }
  if (sum % d != 0) throw invariant_violation("necklace count not divisible");
  return sum / d;
}

PlaceSet enumerate_places(const Field& f, int max_degree, bool include_infinity,
                          const Budget& budget) {
  PlaceSet out;
  if (include_infinity && max_degree >= 1) out.push_back(Place::infinity());
  for (int d = 1; d <= max_degree; ++d) {
    for (Poly& poly : monic_irreducibles(f, d, budget)) {
      out.push_back(Place::finite(f, std::move(poly)));
    }
  }
  return out;
}

int artin_legendre_constant_ext(const Place& x) {
  return x.degree() % 2 == 0 ? 1 : -1;
}

}  // namespace dsheaf
