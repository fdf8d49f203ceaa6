#include "dsheaf/shimura.hpp"

#include <string>

#include "dsheaf/field.hpp"

namespace dsheaf {

namespace {

constexpr std::int64_t kFactorBudget = 1000000000;

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw contract_violation("expected a prime, got " + std::to_string(p));
  }
}

}  // namespace

RationalDiscriminant RationalDiscriminant::make(std::int64_t d) {
  if (d < 1) throw domain_error("discriminant must be positive");
  if (d > kFactorBudget) {
    throw resource_error("discriminant " + std::to_string(d) +
                         " exceeds the factorization budget (10^9)");
  }
  RationalDiscriminant out;
  out.d = d;
  std::int64_t rest = d;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) {
      throw domain_error("discriminant " + std::to_string(d) +
                         " is not squarefree");
    }
    out.primes.push_back(p);
  }
  if (rest > 1) out.primes.push_back(rest);
  if (out.primes.size() < 2 || out.primes.size() % 2 != 0) {
    throw domain_error("discriminant " + std::to_string(d) +
                       " needs an even number (>= 2) of prime factors");
  }
  return out;
}

int legendre_qi(std::int64_t p) {
  require_prime(p);
  if (p == 2) return 0;
  return p % 4 == 1 ? 1 : -1;
}

int legendre_q3(std::int64_t p) {
  require_prime(p);
  if (p == 3) return 0;
  return p % 3 == 1 ? 1 : -1;
}

Int shimura_genus(const RationalDiscriminant& d) {
  Int euler = 1;
  Int e4 = 1;
  Int e3 = 1;
  for (std::int64_t p : d.primes) {
    euler *= p - 1;
    e4 *= 1 - legendre_qi(p);
    e3 *= 1 - legendre_q3(p);
  }
  Rat value = 1 + Rat(euler, 12) - Rat(1, 2) * (Rat(1, 2) * e4 + Rat(2, 3) * e3);
  Int g = to_integer(value, "shimura_genus");
  if (g < 0) throw invariant_violation("shimura_genus: negative genus");
  return g;
}

Int shimura_genus(std::int64_t d) {
  return shimura_genus(RationalDiscriminant::make(d));
}

std::pair<Rat, Rat> zeta_constants(int q) {
  if (q < 2) throw domain_error("q must be >= 2");
  return {Rat(1, 6), Rat(1, Int(q) * q - 1)};
}

}  // namespace dsheaf
