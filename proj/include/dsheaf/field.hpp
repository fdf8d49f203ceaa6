#ifndef DSHEAF_FIELD_HPP
#define DSHEAF_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dsheaf/errors.hpp"
#include "dsheaf/rat.hpp"

namespace dsheaf {

// Limits for field construction and polynomial enumeration. The defaults
// cover q <= 16 and exhaustive degree sweeps up to 12, which is where all
// the shipped tables and tests live. DSHEAF_BUDGET overrides the
// enumeration limits (see from_env).
struct Budget {
  int max_q = 16;
  int max_degree = 12;
  std::int64_t max_candidates = 1 << 20;

  // Reads DSHEAF_BUDGET: either a bare integer (candidate cap) or a
  // comma-separated list of q=..., degree=..., candidates=... overrides.
  static Budget from_env();
};

// The finite field F_q, q = p^e. Elements are integers in [0, q) encoding
// the coefficient vector of the representative polynomial over F_p in base
// p: value = sum c_i * p^i. For e = 1 this is the usual residue
// representation. Arithmetic is table-driven and the object is immutable
// after construction, so Fields are safe to share across threads.
class Field {
 public:
  Field(int p, int e, const Budget& budget = Budget{});

  // Factors q as p^e; rejects non-prime-powers.
  static Field from_order(int q, const Budget& budget = Budget{});

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[check(b)])]; }
  int neg(int a) const { return neg_[check(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int inv(int a) const;
  int pow(int a, const Int& k) const;

  // A fixed multiplicative generator: the least element (in the canonical
  // integer order) of order q-1. Used for the w^k coefficient notation.
  int generator() const { return gen_; }
  int generator_pow(int k) const;  // w^k, any k >= 0
  int log_generator(int a) const;  // k with w^k = a, a != 0

  // Modulus used to represent F_q over F_p when e > 1 (monic, degree e,
  // the least irreducible under the canonical coefficient order).
  // Coefficients low-to-high over F_p, length e + 1.
  const std::vector<int>& modulus() const { return modulus_; }

  // Element rendering for CLI / serialization: plain integers when e = 1,
  // otherwise 0, 1, w, w^2, ... power notation.
  std::string element_str(int a) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_;
  }

 private:
  int p_ = 0, e_ = 0, q_ = 0;
  int gen_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_;
  std::vector<int> neg_, inv_;
  std::vector<int> exp_, log_;

  int check(int a) const {
    if (a < 0 || a >= q_) throw contract_violation("field element out of range");
    return a;
  }
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(check(a)) * q_ + check(b);
  }
};

bool is_prime(std::int64_t n);

}  // namespace dsheaf

#endif
