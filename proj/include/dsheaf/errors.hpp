#ifndef DSHEAF_ERRORS_HPP
#define DSHEAF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dsheaf {

// Invalid mathematical input (e.g. inverting zero, o inside R).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (e.g. non-monic input to an
// irreducibility test).
struct contract_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// A configured budget was exceeded; the message names the budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal identity failed (e.g. a value contracted to be an integer
// came out with a denominator). Indicates a bug, not bad input.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dsheaf

#endif
