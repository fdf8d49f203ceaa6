#pragma once

// Brute-force reference implementations used only by the tests. They are
// deliberately slow and dumb so that a bug in the library and a bug in the
// oracle are unlikely to coincide.

#include <cstdint>
#include <vector>

#include "dsheaf/field.hpp"
#include "dsheaf/invariants.hpp"
#include "dsheaf/places.hpp"
#include "dsheaf/poly.hpp"

namespace oracles {

// Elements of F[u]/(u^e) as coefficient vectors of length e.
struct TruncRing {
  const dsheaf::Field* f;
  int e;

  using Elt = std::vector<int>;

  Elt zero() const { return Elt(e, 0); }
  Elt one() const {
    Elt r(e, 0);
    r[0] = 1;
    return r;
  }
  Elt from_index(std::int64_t idx) const {
    Elt r(e, 0);
    for (int i = 0; i < e; ++i) {
      r[i] = static_cast<int>(idx % f->q());
      idx /= f->q();
    }
    return r;
  }
  std::int64_t size() const {
    std::int64_t s = 1;
    for (int i = 0; i < e; ++i) s *= f->q();
    return s;
  }
  Elt add(const Elt& a, const Elt& b) const {
    Elt r(e, 0);
    for (int i = 0; i < e; ++i) r[i] = f->add(a[i], b[i]);
    return r;
  }
  Elt sub(const Elt& a, const Elt& b) const {
    Elt r(e, 0);
    for (int i = 0; i < e; ++i) r[i] = f->sub(a[i], b[i]);
    return r;
  }
  Elt mul(const Elt& a, const Elt& b) const {
    Elt r(e, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; i + j < e; ++j)
        r[i + j] = f->add(r[i + j], f->mul(a[i], b[j]));
    return r;
  }
};

// Count invertible 2x2 matrices over F_{q_x}[u]/(u^e) by trying every matrix
// and, for each, searching for a multiplicative inverse of its determinant.
inline dsheaf::Int brute_force_gl2_order(int q_x, int e,
                                         const dsheaf::Budget& budget = {}) {
  dsheaf::Field f = dsheaf::Field::from_order(q_x, budget);
  TruncRing ring{&f, e};
  std::int64_t n = ring.size();
  std::vector<TruncRing::Elt> elts;
  elts.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) elts.push_back(ring.from_index(i));

  auto is_unit = [&](const TruncRing::Elt& d) {
    for (const auto& y : elts)
      if (ring.mul(d, y) == ring.one()) return true;
    return false;
  };

  dsheaf::Int count = 0;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d) {
          auto det = ring.sub(ring.mul(elts[a], elts[d]),
                              ring.mul(elts[b], elts[c]));
          if (is_unit(det)) ++count;
        }
  return count;
}

// Trial division by every monic polynomial of degree 1..deg(p)/2.
inline bool naive_irreducible(const dsheaf::Field& f, const dsheaf::Poly& p) {
  int n = p.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  for (int d = 1; 2 * d <= n; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<int> coeffs(static_cast<std::size_t>(d) + 1, 0);
      std::int64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        coeffs[static_cast<std::size_t>(i)] = static_cast<int>(rest % f.q());
        rest /= f.q();
      }
      coeffs[static_cast<std::size_t>(d)] = 1;
      dsheaf::Poly g(coeffs);
      if (dsheaf::poly_mod(f, p, g).is_zero()) return false;
    }
  }
  return true;
}

// Square-and-multiply-free exponentiation: multiply exp times.
inline dsheaf::Poly naive_powmod(const dsheaf::Field& f, const dsheaf::Poly& base,
                                 int exp, const dsheaf::Poly& m) {
  dsheaf::Poly r = dsheaf::poly_mod(f, dsheaf::Poly::one(), m);
  for (int i = 0; i < exp; ++i) r = dsheaf::poly_mulmod(f, r, base, m);
  return r;
}

// All finite place sets of even cardinality >= 2 with total degree <= max_deg.
inline std::vector<dsheaf::PlaceSet> all_discriminants(
    const dsheaf::Field& f, int max_deg, const dsheaf::Budget& budget = {}) {
  dsheaf::PlaceSet pool =
      dsheaf::enumerate_places(f, max_deg - 1, /*include_infinity=*/false, budget);
  std::vector<dsheaf::PlaceSet> out;
  dsheaf::PlaceSet current;
  auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (current.size() >= 2 && current.size() % 2 == 0)
      out.push_back(current);
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool[i].degree() > remaining) break;  // pool is sorted by degree
      current.push_back(pool[i]);
      self(self, i + 1, remaining - pool[i].degree());
      current.pop_back();
    }
  };
  rec(rec, 0, max_deg);
  return out;
}

}  // namespace oracles
