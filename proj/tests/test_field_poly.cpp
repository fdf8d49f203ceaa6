#include <cstdlib>
#include <set>
#include <vector>

#include "doctest.h"
#include "dsheaf/field.hpp"
#include "dsheaf/poly.hpp"
#include "oracles.hpp"

using namespace dsheaf;

namespace {

Poly P(std::vector<int> coeffs) { return Poly(std::move(coeffs)); }

// Every monic polynomial of the given degree, in canonical order.
std::vector<Poly> all_monic(const Field& f, int degree) {
  std::vector<Poly> out;
  std::int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= f.q();
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::vector<int> c(static_cast<std::size_t>(degree) + 1, 0);
    std::int64_t rest = idx;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(rest % f.q());
      rest /= f.q();
    }
    c[static_cast<std::size_t>(degree)] = 1;
    out.push_back(Poly(std::move(c)));
  }
  return out;
}

}  // namespace

TEST_CASE("field axioms hold for every supported order") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    CAPTURE(q);
    Field f = Field::from_order(q);
    REQUIRE(f.q() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.mul(f.generator_pow(f.log_generator(a)), 1) == a);
      }
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    // The generator really has full order.
    std::set<int> powers;
    for (int k = 0; k < q - 1; ++k) powers.insert(f.generator_pow(k));
    CHECK(static_cast<int>(powers.size()) == q - 1);
  }
}

TEST_CASE("field pow agrees with repeated multiplication") {
  for (int q : {2, 3, 4, 9}) {
    Field f = Field::from_order(q);
    for (int a = 0; a < q; ++a) {
      int acc = 1;
      for (int k = 0; k <= 2 * q; ++k) {
        CAPTURE(q);
        CAPTURE(a);
        CAPTURE(k);
        CHECK(f.pow(a, Int(k)) == acc);
        acc = f.mul(acc, a);
      }
    }
    CHECK(f.pow(0, Int(0)) == 1);
    // Negative exponents invert.
    for (int a = 1; a < q; ++a) CHECK(f.pow(a, Int(-1)) == f.inv(a));
  }
}

TEST_CASE("specific small fields look right") {
  Field f2(2, 1);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.element_str(1) == "1");

  Field f3(3, 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.neg(1) == 2);

  Field f4(2, 2);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2+x+1
  CHECK(f4.generator() == 2);
  // w^2 = w + 1 in this representation.
  CHECK(f4.mul(2, 2) == f4.add(2, 1));
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.element_str(0) == "0");
  CHECK(f4.element_str(1) == "1");
  CHECK(f4.element_str(2) == "w");
  CHECK(f4.element_str(3) == "w^2");

  Field f8(2, 3);
  CHECK(f8.modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1
  Field f9(3, 2);
  CHECK(f9.modulus() == std::vector<int>{1, 0, 1});  // x^2+1
  CHECK(f9.generator() == 4);                        // x+1
  Field f16(2, 4);
  CHECK(f16.modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4+x+1
}

TEST_CASE("field construction rejects bad orders") {
  CHECK_THROWS_AS(Field::from_order(6), domain_error);
  CHECK_THROWS_AS(Field::from_order(12), domain_error);
  CHECK_THROWS_AS(Field::from_order(1), domain_error);
  CHECK_THROWS_AS(Field::from_order(0), domain_error);
  CHECK_THROWS_AS(Field::from_order(17), resource_error);  // beyond max_q
  CHECK_THROWS_AS(Field::from_order(32), resource_error);
  CHECK_THROWS_AS(Field(4, 1), domain_error);  // p must be prime
  Budget wide;
  wide.max_q = 32;
  CHECK(Field::from_order(32, wide).q() == 32);
}

TEST_CASE("budget overrides come from the environment") {
  unsetenv("DSHEAF_BUDGET");
  Budget def = Budget::from_env();
  CHECK(def.max_q == 16);
  CHECK(def.max_degree == 12);
  CHECK(def.max_candidates == (1 << 20));

  setenv("DSHEAF_BUDGET", "5000", 1);
  Budget bare = Budget::from_env();
  CHECK(bare.max_candidates == 5000);
  CHECK(bare.max_q == 16);

  setenv("DSHEAF_BUDGET", "q=4,degree=5,candidates=100", 1);
  Budget full = Budget::from_env();
  CHECK(full.max_q == 4);
  CHECK(full.max_degree == 5);
  CHECK(full.max_candidates == 100);

  setenv("DSHEAF_BUDGET", "nonsense=1", 1);
  CHECK_THROWS_AS(Budget::from_env(), domain_error);
  setenv("DSHEAF_BUDGET", "q=abc", 1);
  CHECK_THROWS_AS(Budget::from_env(), domain_error);
  unsetenv("DSHEAF_BUDGET");
}

TEST_CASE("polynomial arithmetic basics") {
  Field f2(2, 1);
  // (T+1)^2 = T^2+1 over F_2.
  Poly t_plus_1 = P({1, 1});
  CHECK(poly_mul(f2, t_plus_1, t_plus_1) == P({1, 0, 1}));
  CHECK(poly_gcd(f2, P({0, 1, 1}), P({0, 1})) == P({0, 1}));  // gcd(T^2+T, T) = T

  Field f3(3, 1);
  // (T^3+1) / (T+1) = T^2+2T+1 exactly over F_3.
  auto [s, r] = poly_divmod(f3, P({1, 0, 0, 1}), P({1, 1}));
  CHECK(s == P({1, 2, 1}));
  CHECK(r.is_zero());

  CHECK_THROWS_AS(poly_divmod(f2, P({1, 1}), Poly::zero()), domain_error);
  CHECK(Poly::zero().degree() == -1);
  CHECK(Poly::variable() == P({0, 1}));
  CHECK(poly_eval(f3, P({1, 2, 1}), 1) == 1);  // 1+2+1 = 4 = 1 mod 3
}

TEST_CASE("divmod satisfies the division identity exhaustively") {
  for (int q : {2, 3}) {
    Field f = Field::from_order(q);
    std::vector<Poly> polys;
    polys.push_back(Poly::zero());
    for (int d = 0; d <= 3; ++d) {
      std::int64_t count = 1;
      for (int i = 0; i <= d; ++i) count *= q;
      for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<int> c(static_cast<std::size_t>(d) + 1, 0);
        std::int64_t rest = idx;
        for (int i = 0; i <= d; ++i) {
          c[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
          rest /= q;
        }
        Poly p(std::move(c));
        if (p.degree() == d) polys.push_back(std::move(p));
      }
    }
    for (const Poly& a : polys) {
      for (const Poly& g : polys) {
        if (g.is_zero()) continue;
        auto [s, r] = poly_divmod(f, a, g);
        CHECK(poly_add(f, poly_mul(f, s, g), r) == a);
        CHECK(r.degree() < g.degree());
      }
    }
  }
}

TEST_CASE("gcd is monic and divides both arguments") {
  Field f3(3, 1);
  Poly a = poly_mul(f3, P({1, 1}), P({2, 1}));        // (T+1)(T+2)
  Poly b = poly_mul(f3, P({1, 1}), P({1, 0, 1}));     // (T+1)(T^2+1)
  Poly g = poly_gcd(f3, a, b);
  CHECK(g == P({1, 1}));
  CHECK(poly_gcd(f3, Poly::zero(), Poly::zero()).is_zero());
  CHECK(poly_gcd(f3, P({0, 2}), Poly::zero()) == P({0, 1}));  // made monic
}

TEST_CASE("powmod agrees with the naive oracle") {
  for (int q : {2, 3, 4}) {
    Field f = Field::from_order(q);
    Poly m = P({1, 0, 0, 1});  // T^3+1, any nonzero modulus works here
    for (const Poly& base : all_monic(f, 2)) {
      for (int exp = 0; exp <= 12; ++exp) {
        CAPTURE(q);
        CAPTURE(exp);
        CHECK(poly_powmod(f, base, Int(exp), m) ==
              oracles::naive_powmod(f, base, exp, m));
      }
    }
  }
}

TEST_CASE("irreducibility matches trial division") {
  for (int q : {2, 3}) {
    Field f = Field::from_order(q);
    for (int d = 1; d <= 4; ++d) {
      for (const Poly& p : all_monic(f, d)) {
        CAPTURE(q);
        CAPTURE(poly_str(f, p));
        CHECK(is_irreducible(f, p) == oracles::naive_irreducible(f, p));
      }
    }
  }
  Field f4(2, 2);
  for (int d = 1; d <= 3; ++d) {
    for (const Poly& p : all_monic(f4, d)) {
      CHECK(is_irreducible(f4, p) == oracles::naive_irreducible(f4, p));
    }
  }
}

TEST_CASE("irreducibility examples and contract") {
  Field f2(2, 1);
  CHECK(is_irreducible(f2, P({1, 1, 1})));        // T^2+T+1
  CHECK_FALSE(is_irreducible(f2, P({1, 0, 1})));  // T^2+1 = (T+1)^2
  Field f3(3, 1);
  CHECK(is_irreducible(f3, P({1, 0, 1})));  // T^2+1 has no root mod 3
  CHECK_THROWS_AS(is_irreducible(f3, P({1, 2})), contract_violation);  // not monic
  CHECK_THROWS_AS(is_irreducible(f3, P({2})), contract_violation);     // constant
}

TEST_CASE("monic irreducible enumeration is canonical and budgeted") {
  Field f2(2, 1);
  CHECK(monic_irreducibles(f2, 1) == std::vector<Poly>{P({0, 1}), P({1, 1})});
  CHECK(monic_irreducibles(f2, 3) ==
        std::vector<Poly>{P({1, 1, 0, 1}), P({1, 0, 1, 1})});  // T^3+T+1 < T^3+T^2+1

  Field f3(3, 1);
  CHECK(monic_irreducibles(f3, 2).size() == 3);
  for (int q : {2, 3, 4}) {
    Field f = Field::from_order(q);
    for (int d = 1; d <= 5; ++d) {
      auto list = monic_irreducibles(f, d);
      for (std::size_t i = 0; i + 1 < list.size(); ++i) {
        CHECK(poly_less(list[i], list[i + 1]));
      }
      for (const Poly& p : list) CHECK(oracles::naive_irreducible(f, p));
    }
  }

  CHECK_THROWS_AS(monic_irreducibles(f2, 13), resource_error);
  Budget tiny;
  tiny.max_candidates = 4;
  CHECK_THROWS_AS(monic_irreducibles(f2, 4, tiny), resource_error);

  auto skip_t = first_monic_irreducibles(f2, 1, 1, {P({0, 1})});
  CHECK(skip_t == std::vector<Poly>{P({1, 1})});
  auto two_cubics = first_monic_irreducibles(f2, 3, 2, {});
  CHECK(two_cubics == monic_irreducibles(f2, 3));
}

TEST_CASE("poly text round trips") {
  Field f2(2, 1);
  Field f3(3, 1);
  Field f4(2, 2);
  CHECK(poly_str(f2, P({1, 1, 0, 1})) == "T^3+T+1");
  CHECK(poly_str(f3, P({1, 2, 2})) == "2*T^2+2*T+1");
  CHECK(poly_str(f4, P({3, 1})) == "T+w^2");
  CHECK(poly_str(f2, Poly::zero()) == "0");

  CHECK(parse_poly(f2, "T^3 + T + 1") == P({1, 1, 0, 1}));
  CHECK(parse_poly(f3, "T^2-T+1") == P({1, 2, 1}));
  CHECK(parse_poly(f4, "w^2*T^3") == P({0, 0, 0, 3}));
  CHECK(parse_poly(f4, "w*T+w") == P({2, 2}));
  CHECK(parse_poly(f2, "0") == Poly::zero());
  CHECK(parse_poly(f3, "5") == P({2}));  // residues reduce mod p when e = 1

  for (const Field* f : {&f2, &f4}) {
    for (int d = 0; d <= 3; ++d) {
      for (const Poly& p : all_monic(*f, d)) {
        CHECK(parse_poly(*f, poly_str(*f, p)) == p);
      }
    }
  }

  CHECK_THROWS_AS(parse_poly(f2, "T+"), domain_error);
  CHECK_THROWS_AS(parse_poly(f2, "x^2"), domain_error);
  CHECK_THROWS_AS(parse_poly(f2, ""), domain_error);
  CHECK_THROWS_AS(parse_poly(f2, "w"), domain_error);    // no w when e = 1
  CHECK_THROWS_AS(parse_poly(f4, "4*T"), domain_error);  // coefficient >= q
}
