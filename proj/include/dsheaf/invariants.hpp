#ifndef DSHEAF_INVARIANTS_HPP
#define DSHEAF_INVARIANTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsheaf/places.hpp"

namespace dsheaf {

// Ramification set R of a division quaternion algebra over F_q(T) that is
// split at infinity: distinct finite places, even cardinality >= 2.
class Discriminant {
 public:
  static Discriminant make(const Field& f, PlaceSet places);

  // Canonical realization of a degree multiset: for each degree, the first
  // monic irreducibles in polynomial order, skipping `avoid`. Throws
  // domain_error when there are not enough places of some degree.
  static Discriminant from_degrees(const Field& f,
                                   const std::vector<int>& degrees,
                                   const std::optional<Place>& avoid = std::nullopt,
                                   const Budget& budget = Budget{});

  const PlaceSet& places() const { return places_; }
  int cardinality() const { return static_cast<int>(places_.size()); }
  int disc_degree() const;           // deg(r), sum of the place degrees
  std::vector<int> degrees() const;  // ascending degree multiset

  bool contains(const Place& x) const;

 private:
  explicit Discriminant(PlaceSet places) : places_(std::move(places)) {}
  PlaceSet places_;
};

// Nonzero ideal of F_q[T] given by its prime factorization; the support
// must stay disjoint from R, which the chi operations check.
class LevelIdeal {
 public:
  static LevelIdeal make(const Field& f,
                         std::vector<std::pair<Place, int>> factors);
  const std::vector<std::pair<Place, int>>& factors() const { return factors_; }

 private:
  explicit LevelIdeal(std::vector<std::pair<Place, int>> factors)
      : factors_(std::move(factors)) {}
  std::vector<std::pair<Place, int>> factors_;
};

// 0 when some place of s has even degree, 1 otherwise; wp({}) = 1.
int wp(const PlaceSet& s);

// Mass of the auxiliary quaternion algebra ramified at R and o:
// (1/(q^2-1)) prod_{x in R cup o} (q_x - 1). o in R is a domain_error.
Rat mass(const Field& f, const Discriminant& r, const Place& o);

// mass + (q/(q+1)) 2^#R wp(R cup o); always an integer.
Int class_number(const Field& f, const Discriminant& r, const Place& o);

// The same values computed from the degree data alone; like the genus,
// mass and class number depend only on the degrees of R and o. Used by the
// comparison table, which ranges over degree pairs rather than place sets.
Rat mass_from_degrees(const Field& f, const std::vector<int>& degrees,
                      int o_degree);
Int class_number_from_degrees(const Field& f, const std::vector<int>& degrees,
                              int o_degree);

// Equals the class number; every supersingular point of the reduction at o
// is rational over the quadratic extension of the residue field at o.
Int supersingular_count(const Field& f, const Discriminant& r, const Place& o);

// Points with extra automorphisms on the bare modular curve: 2^#R wp(R).
Int extra_autos(const Discriminant& r);

// Order of GL_2 over the local quotient ring with residue size q_x and
// nilpotency length e: q_x^(4(e-1)) (q_x^2 - 1)(q_x^2 - q_x).
Int gl2_order(const Int& q_x, int e);

// Degree of the level covering: prod gl2_order / (q - 1).
Int covering_degree(const Field& f, const LevelIdeal& level);

// chi of the level-I curve: -(2 #GL2(O_I) / ((q-1)(q^2-1))) prod_{x in R}(q_x-1).
Int chi_level(const Field& f, const Discriminant& r, const LevelIdeal& level);

// chi of the bare curve: -(2/(q^2-1)) prod_{x in R}(q_x-1) + (q/(q+1)) 2^#R wp(R).
Int chi_bare(const Field& f, const Discriminant& r);

// chi_level - (deg(pi) chi_bare - deg(pi) (q/(q+1)) extra_autos); zero for
// every valid input, kept as a cross-formula consistency check.
Int riemann_hurwitz_residual(const Field& f, const Discriminant& r,
                             const LevelIdeal& level);

// 1 + (1/(q^2-1)) (prod_{x in R}(q_x-1) - q(q-1) 2^(#R-1) wp(R)); always a
// nonnegative multiple of q, both asserted.
Int genus(const Field& f, const Discriminant& r);

// Same formula evaluated from the degree multiset alone (the genus does
// not depend on which places realize the degrees).
Int genus_from_degrees(const Field& f, const std::vector<int>& degrees);

// Equivalent form via the constant-field-extension Artin-Legendre symbol:
// 1 + (1/(q^2-1)) prod (q_x-1) - (1/2)(q/(q+1)) prod (1 - (-1)^deg(x)).
// Kept as an independent code path for the equality property test.
Int genus_artin_legendre_form(const Field& f, const Discriminant& r);

enum class Hyperelliptic { yes, no, unknown };
const char* to_string(Hyperelliptic h);

struct Classification {
  bool genus_zero = false;
  Hyperelliptic hyperelliptic = Hyperelliptic::unknown;
};

// genus_zero iff deg(r) = 2 or (q = 4 and R is all four degree-1 places).
// hyperelliptic: for odd q, yes iff deg(r) = 3, no otherwise; for even q,
// no when the genus is zero and unknown otherwise.
Classification classify(const Field& f, const Discriminant& r);

struct InvariantReport {
  int q = 0;
  std::vector<int> r_degrees;
  std::vector<std::string> r_polys;
  std::optional<std::string> o;
  std::optional<Rat> mass;
  std::optional<Int> class_number;
  std::optional<Int> supersingular;
  std::optional<Int> rationality_field;       // q_o^2, with o
  std::optional<std::string> extra_autos_kind;  // ordinary/supersingular, with o
  Int extra_autos;
  Int genus;
  Int chi0;
  std::optional<Rat> ratio;  // supersingular/genus; omitted when genus = 0

  bool operator==(const InvariantReport&) const = default;
};

InvariantReport compute_report(const Field& f, const Discriminant& r,
                               const std::optional<Place>& o);

// One report per valid R: distinct finite places avoiding o, cardinality
// r_cardinality (or every even cardinality when unset), deg(r) up to
// max_disc_degree. Sorted by (deg(r), degree multiset, place order).
std::vector<InvariantReport> optimality_scan(const Field& f, const Place& o,
                                             int max_disc_degree,
                                             std::optional<int> r_cardinality,
                                             const Budget& budget = Budget{});

}  // namespace dsheaf

#endif
