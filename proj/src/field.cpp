#include "dsheaf/field.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace dsheaf {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::int64_t parse_budget_int(const std::string& text) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw domain_error("DSHEAF_BUDGET: not a number: '" + text + "'");
  }
  if (pos != text.size() || value <= 0) {
    throw domain_error("DSHEAF_BUDGET: expected a positive integer, got '" +
                       text + "'");
  }
  return value;
}

// F_p polynomial helpers used only to pick the representation modulus.
std::vector<int> fp_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  while (a.size() >= m.size()) {
    int lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - m.size();
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool fp_irreducible(const std::vector<int>& m, int p) {
  int e = static_cast<int>(m.size()) - 1;
  // Trial division by every monic polynomial of degree up to e/2; any
  // factorization of m contains such a divisor.
  for (int d = 1; 2 * d <= e; ++d) {
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::int64_t v = 0; v < total; ++v) {
      std::vector<int> g(d + 1);
      std::int64_t rest = v;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (fp_mod(m, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Budget Budget::from_env() {
  Budget budget;
  const char* raw = std::getenv("DSHEAF_BUDGET");
  if (raw == nullptr || *raw == '\0') return budget;
  std::string text(raw);
  if (text.find('=') == std::string::npos) {
    budget.max_candidates = parse_budget_int(text);
    return budget;
  }
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw domain_error("DSHEAF_BUDGET: expected key=value, got '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    std::int64_t value = parse_budget_int(item.substr(eq + 1));
    if (key == "q") {
      budget.max_q = static_cast<int>(value);
    } else if (key == "degree") {
      budget.max_degree = static_cast<int>(value);
    } else if (key == "candidates") {
      budget.max_candidates = value;
    } else {
      throw domain_error("DSHEAF_BUDGET: unknown key '" + key + "'");
    }
  }
  return budget;
}

Field::Field(int p, int e, const Budget& budget) : p_(p), e_(e) {
  if (!is_prime(p)) {
    throw domain_error("field characteristic must be prime, got " +
                       std::to_string(p));
  }
  if (e < 1) throw domain_error("field exponent must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > budget.max_q) {
      throw resource_error("field order " + std::to_string(p) + "^" +
                           std::to_string(e) + " exceeds budget (max_q=" +
                           std::to_string(budget.max_q) + ")");
    }
  }
  q_ = static_cast<int>(q);

  // Least monic irreducible of degree e over F_p in the canonical value
  // order; for e = 1 this is just x.
  modulus_.assign(e + 1, 0);
  modulus_[e] = 1;
  if (e > 1) {
    std::int64_t total = q_;  // p^e candidates for the low coefficients
    bool found = false;
    for (std::int64_t v = 0; v < total && !found; ++v) {
      std::int64_t rest = v;
      for (int i = 0; i < e; ++i) {
        modulus_[i] = static_cast<int>(rest % p);
        rest /= p;
      }
      found = fp_irreducible(modulus_, p);
    }
    if (!found) throw invariant_violation("no irreducible modulus found");
  }

  // Elements encode F_p coefficient vectors in base p. Addition is
  // digit-wise; multiplication reduces by the modulus.
  auto digits = [&](int a) {
    std::vector<int> out(e_);
    for (int i = 0; i < e_; ++i) {
      out[i] = a % p_;
      a /= p_;
    }
    return out;
  };
  auto value = [&](const std::vector<int>& coeffs) {
    int out = 0;
    for (int i = e_ - 1; i >= 0; --i) {
      out = out * p_ + (i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0);
    }
    return out;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<int> dn(e_);
    for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = value(dn);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<int> sum(e_);
      for (int i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[static_cast<std::size_t>(a) * q_ + b] = value(sum);
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i) {
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      mul_[static_cast<std::size_t>(a) * q_ + b] = value(fp_mod(prod, modulus_, p_));
    }
  }

  // Pick the least generator of the multiplicative group and build the
  // discrete log tables off it.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  for (int a = 1; a < q_ && gen_ == 0; ++a) {
    int x = a;
    int order = 1;
    while (x != 1) {
      x = mul_[static_cast<std::size_t>(x) * q_ + a];
      ++order;
    }
    if (order == q_ - 1) gen_ = a;
  }
  if (gen_ == 0) throw invariant_violation("no multiplicative generator found");
  int x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul_[static_cast<std::size_t>(x) * q_ + gen_];
  }
  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field Field::from_order(int q, const Budget& budget) {
  if (q < 2) throw domain_error("field order must be >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw domain_error("field order " + std::to_string(q) +
                       " is not a prime power");
  }
  return Field(p, e, budget);
}

int Field::inv(int a) const {
  if (check(a) == 0) throw domain_error("inverse of zero");
  return inv_[a];
}

int Field::pow(int a, const Int& k) const {
  check(a);
  if (k < 0) return pow(inv(a), -k);
  if (a == 0) return k == 0 ? 1 : 0;
  Int r = (Int(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
  return exp_[r.convert_to<int>()];
}

int Field::generator_pow(int k) const {
  if (k < 0) throw contract_violation("negative generator power");
  return exp_[k % (q_ - 1)];
}

int Field::log_generator(int a) const {
  if (check(a) == 0) throw domain_error("log of zero");
  return log_[a];
}

std::string Field::element_str(int a) const {
  check(a);
  if (e_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  if (a == 1) return "1";
  int k = log_[a];
  if (k == 1) return "w";
  return "w^" + std::to_string(k);
}

}  // namespace dsheaf
