#ifndef DSHEAF_PLACES_HPP
#define DSHEAF_PLACES_HPP

#include <string>
#include <vector>

#include "dsheaf/poly.hpp"

namespace dsheaf {

// A place of the projective line over F_q: either a monic irreducible
// polynomial (finite place) or the point at infinity, which has degree 1.
class Place {
 public:
  static Place infinity();
  // Validates monic and irreducible; throws domain_error otherwise.
  static Place finite(const Field& f, Poly poly);

  bool is_infinity() const { return infinity_; }
  const Poly& poly() const;  // contract_violation on infinity
  int degree() const { return degree_; }

  bool operator==(const Place& other) const {
    return infinity_ == other.infinity_ && poly_ == other.poly_;
  }

 private:
  Place() = default;
  bool infinity_ = false;
  Poly poly_;
  int degree_ = 0;
};

// Residue field size q_x = q^deg(x), as a big integer.
Int residue_size(const Field& f, const Place& x);

// Canonical order: infinity first, then by degree, then poly_less.
bool place_less(const Place& a, const Place& b);

// "inf" or the polynomial rendered by poly_str.
std::string place_str(const Field& f, const Place& x);
Place parse_place(const Field& f, const std::string& text);

// Distinct places in canonical order. make_place_set sorts and rejects
// duplicates with a domain_error.
using PlaceSet = std::vector<Place>;
PlaceSet make_place_set(const Field& f, std::vector<Place> places);

// Number of finite places of degree d: (1/d) sum_{e|d} mu(e) q^(d/e).
// Infinity is not counted; callers add 1 at d = 1 if they want all places.
Int count_places_of_degree(const Field& f, int d);

// All places of degree <= max_degree in canonical order.
PlaceSet enumerate_places(const Field& f, int max_degree, bool include_infinity,
                          const Budget& budget = Budget{});

// Splitting of x in the constant-field extension F_{q^2}(T): +1 when deg(x)
// is even (split), -1 when odd (inert). The extension is everywhere
// unramified, so 0 never occurs.
int artin_legendre_constant_ext(const Place& x);

}  // namespace dsheaf

#endif
