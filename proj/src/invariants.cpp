#include "dsheaf/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace dsheaf {

namespace {

Int product_qx_minus_1(const Field& f, const PlaceSet& places) {
  Int prod = 1;
  for (const Place& x : places) prod *= residue_size(f, x) - 1;
  return prod;
}

void require_characteristic_place(const Field& f, const Discriminant& r,
                                  const Place& o) {
  if (o.is_infinity()) throw domain_error("o must be a finite place");
  if (r.contains(o)) {
    throw domain_error("o = '" + place_str(f, o) + "' lies in R");
  }
}

}  // namespace

Discriminant Discriminant::make(const Field& f, PlaceSet places) {
  for (const Place& x : places) {
    if (x.is_infinity()) throw domain_error("R must consist of finite places");
  }
  PlaceSet sorted = make_place_set(f, std::move(places));
  if (sorted.size() < 2 || sorted.size() % 2 != 0) {
    throw domain_error("R must contain an even number (>= 2) of places, got " +
                       std::to_string(sorted.size()));
  }
  return Discriminant(std::move(sorted));
}

Discriminant Discriminant::from_degrees(const Field& f,
                                        const std::vector<int>& degrees,
                                        const std::optional<Place>& avoid,
                                        const Budget& budget) {
  std::map<int, int> multiplicity;
  for (int d : degrees) {
    if (d < 1) throw domain_error("place degrees must be >= 1");
    ++multiplicity[d];
  }
  PlaceSet places;
  for (const auto& [degree, count] : multiplicity) {
    std::vector<Poly> skip;
    if (avoid && !avoid->is_infinity() && avoid->degree() == degree) {
      skip.push_back(avoid->poly());
    }
    std::vector<Poly> found = first_monic_irreducibles(f, degree, count, skip, budget);
    if (static_cast<int>(found.size()) < count) {
      throw domain_error("only " + std::to_string(found.size()) + " place(s) of degree " +
                         std::to_string(degree) + " are available" +
                         (skip.empty() ? "" : " once o is excluded") +
                         ", need " + std::to_string(count));
    }
    for (Poly& poly : found) places.push_back(Place::finite(f, std::move(poly)));
  }
  return make(f, std::move(places));
}

int Discriminant::disc_degree() const {
  int sum = 0;
  for (const Place& x : places_) sum += x.degree();
  return sum;
}

std::vector<int> Discriminant::degrees() const {
  std::vector<int> out;
  out.reserve(places_.size());
  for (const Place& x : places_) out.push_back(x.degree());
  std::sort(out.begin(), out.end());
  return out;
}

bool Discriminant::contains(const Place& x) const {
  return std::find(places_.begin(), places_.end(), x) != places_.end();
}

LevelIdeal LevelIdeal::make(const Field& f,
                            std::vector<std::pair<Place, int>> factors) {
  if (factors.empty()) throw domain_error("level ideal must be nonzero and proper (nonempty factorization)");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [place, exponent] = factors[i];
    if (place.is_infinity()) {
      throw domain_error("level ideal must be supported on finite places");
    }
    if (exponent < 1) throw domain_error("level exponents must be >= 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[j].first == place) {
        throw domain_error("duplicate place '" + place_str(f, place) +
                           "' in level ideal");
      }
    }
  }
  return LevelIdeal(std::move(factors));
}

int wp(const PlaceSet& s) {
  for (const Place& x : s) {
    if (x.degree() % 2 == 0) return 0;
  }
  return 1;
}

namespace {

void check_degree_multiset(const std::vector<int>& degrees) {
  if (degrees.size() < 2 || degrees.size() % 2 != 0) {
    throw domain_error("R must contain an even number (>= 2) of places, got " +
                       std::to_string(degrees.size()));
  }
  for (int d : degrees) {
    if (d < 1) throw domain_error("place degrees must be >= 1");
  }
}

}  // namespace

Rat mass_from_degrees(const Field& f, const std::vector<int>& degrees,
                      int o_degree) {
  check_degree_multiset(degrees);
  if (o_degree < 1) throw domain_error("deg(o) must be >= 1");
  Int prod = pow_int(Int(f.q()), static_cast<unsigned>(o_degree)) - 1;
  for (int d : degrees) {
    prod *= pow_int(Int(f.q()), static_cast<unsigned>(d)) - 1;
  }
  return Rat(prod, Int(f.q()) * f.q() - 1);
}

Int class_number_from_degrees(const Field& f, const std::vector<int>& degrees,
                              int o_degree) {
  int parity = o_degree % 2;
  for (int d : degrees) {
    if (d % 2 == 0) parity = 0;
  }
  Rat value = mass_from_degrees(f, degrees, o_degree) +
              Rat(f.q(), f.q() + 1) *
                  pow_int(Int(2), static_cast<unsigned>(degrees.size())) * parity;
  return to_integer(value, "class_number");
}

Rat mass(const Field& f, const Discriminant& r, const Place& o) {
  require_characteristic_place(f, r, o);
  return mass_from_degrees(f, r.degrees(), o.degree());
}

Int class_number(const Field& f, const Discriminant& r, const Place& o) {
  require_characteristic_place(f, r, o);
  return class_number_from_degrees(f, r.degrees(), o.degree());
}

Int supersingular_count(const Field& f, const Discriminant& r, const Place& o) {
  return class_number(f, r, o);
}

Int extra_autos(const Discriminant& r) {
  return pow_int(Int(2), r.cardinality()) * wp(r.places());
}

Int gl2_order(const Int& q_x, int e) {
  if (q_x < 2) throw contract_violation("gl2_order needs q_x >= 2");
  if (e < 1) throw contract_violation("gl2_order needs e >= 1");
  Int q2 = q_x * q_x;
  return pow_int(q_x, static_cast<unsigned>(4 * (e - 1))) * (q2 - 1) * (q2 - q_x);
}

namespace {

Int level_group_order(const Field& f, const LevelIdeal& level) {
  Int order = 1;
  for (const auto& [place, exponent] : level.factors()) {
    order *= gl2_order(residue_size(f, place), exponent);
  }
  return order;
}

}  // namespace

Int covering_degree(const Field& f, const LevelIdeal& level) {
  return to_integer(Rat(level_group_order(f, level), f.q() - 1),
                    "covering_degree");
}

Int chi_level(const Field& f, const Discriminant& r, const LevelIdeal& level) {
  for (const auto& [place, exponent] : level.factors()) {
    if (r.contains(place)) {
      throw domain_error("level place '" + place_str(f, place) + "' lies in R");
    }
  }
  Rat value = Rat(-2 * level_group_order(f, level),
                  Int(f.q() - 1) * (Int(f.q()) * f.q() - 1)) *
              product_qx_minus_1(f, r.places());
  return to_integer(value, "chi_level");
}

Int chi_bare(const Field& f, const Discriminant& r) {
  Rat value = Rat(-2 * product_qx_minus_1(f, r.places()), Int(f.q()) * f.q() - 1) +
              Rat(f.q(), f.q() + 1) * extra_autos(r);
  return to_integer(value, "chi_bare");
}

Int riemann_hurwitz_residual(const Field& f, const Discriminant& r,
                             const LevelIdeal& level) {
  Int deg_pi = covering_degree(f, level);
  Rat rhs = Rat(deg_pi) * chi_bare(f, r) -
            Rat(deg_pi) * Rat(f.q(), f.q() + 1) * extra_autos(r);
  return to_integer(chi_level(f, r, level) - rhs, "riemann_hurwitz_residual");
}

namespace {

Int genus_value(const Field& f, const Int& prod, int cardinality, int parity,
                const char* what) {
  Rat value = 1 + Rat(prod - Int(f.q()) * (f.q() - 1) *
                                 pow_int(Int(2), cardinality - 1) * parity,
                      Int(f.q()) * f.q() - 1);
  Int g = to_integer(value, what);
  if (g < 0) throw invariant_violation(std::string(what) + ": negative genus");
  if (g % f.q() != 0) {
    throw invariant_violation(std::string(what) + ": genus " + g.str() +
                              " not divisible by q=" + std::to_string(f.q()));
  }
  return g;
}

}  // namespace

Int genus(const Field& f, const Discriminant& r) {
  return genus_value(f, product_qx_minus_1(f, r.places()), r.cardinality(),
                     wp(r.places()), "genus");
}

Int genus_from_degrees(const Field& f, const std::vector<int>& degrees) {
  if (degrees.size() < 2 || degrees.size() % 2 != 0) {
    throw domain_error("R must contain an even number (>= 2) of places, got " +
                       std::to_string(degrees.size()));
  }
  Int prod = 1;
  int parity = 1;
  for (int d : degrees) {
    if (d < 1) throw domain_error("place degrees must be >= 1");
    prod *= pow_int(Int(f.q()), static_cast<unsigned>(d)) - 1;
    if (d % 2 == 0) parity = 0;
  }
  return genus_value(f, prod, static_cast<int>(degrees.size()), parity,
                     "genus_from_degrees");
}

Int genus_artin_legendre_form(const Field& f, const Discriminant& r) {
  Int split_prod = 1;
  for (const Place& x : r.places()) split_prod *= 1 - artin_legendre_constant_ext(x);
  Rat value = 1 +
              Rat(product_qx_minus_1(f, r.places()), Int(f.q()) * f.q() - 1) -
              Rat(1, 2) * Rat(f.q(), f.q() + 1) * split_prod;
  return to_integer(value, "genus_artin_legendre_form");
}

const char* to_string(Hyperelliptic h) {
  switch (h) {
    case Hyperelliptic::yes: return "yes";
    case Hyperelliptic::no: return "no";
    default: return "unknown";
  }
}

Classification classify(const Field& f, const Discriminant& r) {
  Classification out;
  bool all_linear = true;
  for (int d : r.degrees()) all_linear = all_linear && d == 1;
  out.genus_zero = r.disc_degree() == 2 ||
                   (f.q() == 4 && r.cardinality() == 4 && all_linear);
  if (f.q() % 2 == 1) {
    out.hyperelliptic = r.disc_degree() == 3 ? Hyperelliptic::yes : Hyperelliptic::no;
  } else {
    out.hyperelliptic = genus(f, r) == 0 ? Hyperelliptic::no : Hyperelliptic::unknown;
  }
  return out;
}

InvariantReport compute_report(const Field& f, const Discriminant& r,
                               const std::optional<Place>& o) {
  InvariantReport report;
  report.q = f.q();
  report.r_degrees = r.degrees();
  for (const Place& x : r.places()) report.r_polys.push_back(place_str(f, x));
  report.extra_autos = extra_autos(r);
  report.genus = genus(f, r);
  report.chi0 = chi_bare(f, r);
  if (o) {
    report.o = place_str(f, *o);
    report.mass = mass(f, r, *o);
    report.class_number = class_number(f, r, *o);
    report.supersingular = report.class_number;
    report.rationality_field = residue_size(f, *o) * residue_size(f, *o);
    if (wp(r.places()) == 1) {
      report.extra_autos_kind =
          o->degree() % 2 == 0 ? "ordinary" : "supersingular";
    }
    if (report.genus > 0) report.ratio = Rat(*report.supersingular, report.genus);
  }
  return report;
}

namespace {

void multisets_with_sum(int min_degree, int slots, int degree_budget,
                        std::vector<int>& current,
                        const std::function<void(const std::vector<int>&)>& emit) {
  if (slots == 0) {
    emit(current);
    return;
  }
  for (int d = min_degree; d * slots <= degree_budget; ++d) {
    current.push_back(d);
    multisets_with_sum(d, slots - 1, degree_budget - d, current, emit);
    current.pop_back();
  }
}

}  // namespace

std::vector<InvariantReport> optimality_scan(const Field& f, const Place& o,
                                             int max_disc_degree,
                                             std::optional<int> r_cardinality,
                                             const Budget& budget) {
  if (o.is_infinity()) throw domain_error("o must be a finite place");
  if (r_cardinality && (*r_cardinality < 2 || *r_cardinality % 2 != 0)) {
    throw domain_error("r_cardinality must be an even integer >= 2");
  }
  if (max_disc_degree > budget.max_degree) {
    throw resource_error("scan degree " + std::to_string(max_disc_degree) +
                         " exceeds budget (max_degree=" +
                         std::to_string(budget.max_degree) + ")");
  }

  std::map<int, Int> available;
  auto places_available = [&](const std::vector<int>& degrees) {
    std::map<int, int> multiplicity;
    for (int d : degrees) ++multiplicity[d];
    for (const auto& [degree, count] : multiplicity) {
      auto it = available.find(degree);
      if (it == available.end()) {
        Int n = count_places_of_degree(f, degree);
        if (degree == o.degree()) n -= 1;
        it = available.emplace(degree, n).first;
      }
      if (it->second < count) return false;
    }
    return true;
  };

  std::vector<InvariantReport> reports;
  auto emit = [&](const std::vector<int>& degrees) {
    if (!places_available(degrees)) return;
    if (static_cast<std::int64_t>(reports.size()) >= budget.max_candidates) {
      throw resource_error("scan exceeded max_candidates budget (" +
                           std::to_string(budget.max_candidates) + ")");
    }
    Discriminant r = Discriminant::from_degrees(f, degrees, o, budget);
    reports.push_back(compute_report(f, r, o));
  };

  std::vector<int> current;
  if (r_cardinality) {
    multisets_with_sum(1, *r_cardinality, max_disc_degree, current, emit);
  } else {
    for (int k = 2; k <= max_disc_degree; k += 2) {
      multisets_with_sum(1, k, max_disc_degree, current, emit);
    }
  }

  std::sort(reports.begin(), reports.end(),
            [](const InvariantReport& a, const InvariantReport& b) {
              int da = std::accumulate(a.r_degrees.begin(), a.r_degrees.end(), 0);
              int db = std::accumulate(b.r_degrees.begin(), b.r_degrees.end(), 0);
              if (da != db) return da < db;
              if (a.r_degrees != b.r_degrees) return a.r_degrees < b.r_degrees;
              return a.r_polys < b.r_polys;
            });
  return reports;
}

}  // namespace dsheaf
