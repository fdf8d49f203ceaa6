#ifndef DSHEAF_SHIMURA_HPP
#define DSHEAF_SHIMURA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dsheaf/rat.hpp"

namespace dsheaf {

// Reduced discriminant of an indefinite rational quaternion division
// algebra: squarefree, with an even number (>= 2) of prime factors.
struct RationalDiscriminant {
  std::int64_t d = 0;
  std::vector<std::int64_t> primes;  // ascending

  // Factors d by trial division (d <= 10^9). Non-squarefree d or an odd
  // number of prime factors is a domain_error; larger d a resource_error.
  static RationalDiscriminant make(std::int64_t d);
};

// Splitting of p in Q(i): 0 at p = 2, +1 when p = 1 mod 4, -1 otherwise.
int legendre_qi(std::int64_t p);

// Splitting of p in Q(sqrt(-3)): 0 at p = 3, +1 when p = 1 mod 3, -1 otherwise.
int legendre_q3(std::int64_t p);

// Genus of the Shimura curve X^d:
// 1 + (1/12) prod_{p|d}(p-1)
//   - (1/2) [ (1/2) prod (1 - legendre_qi(p)) + (2/3) prod (1 - legendre_q3(p)) ].
Int shimura_genus(const RationalDiscriminant& d);
Int shimura_genus(std::int64_t d);

// (-zeta_Z(-1), -zeta_A(-1)) = (1/6, 1/(q^2-1)), the analogous constants
// in the two genus formulas.
std::pair<Rat, Rat> zeta_constants(int q);

}  // namespace dsheaf

#endif
