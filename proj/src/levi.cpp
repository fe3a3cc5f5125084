#include "lieplan/levi.hpp"

#include <algorithm>

#include "lieplan/errors.hpp"

namespace lieplan {

bool in_center(const Weight& lambda, const LeviDescriptor& levi) {
  const auto n = static_cast<std::size_t>(levi.spec.rank);
  if (lambda.size() != n) throw DimensionError("weight rank does not match the Levi");
  const auto first_tail = static_cast<std::size_t>(levi.abelian);
  for (std::size_t i = first_tail; i < n; ++i) {
    if (levi.spec.family == RootFamily::C) {
      if (!lambda.at(i).is_zero()) return false;
    } else if (!(lambda.at(i) == lambda.at(first_tail))) {
      return false;
    }
  }
  return true;
}

void require_center_support(const Weight& lambda, const LeviDescriptor& levi) {
  if (!in_center(lambda, levi)) throw SupportError("weight is not supported on the center of the Levi");
}

bool is_Zreg(const Weight& lambda, const LeviDescriptor& levi) {
  require_center_support(lambda, levi);
  for (const auto& alpha : levi.complement_roots())
    if (pairing(lambda, alpha).is_zero()) return false;
  return true;
}

bool good_range(const Weight& lambda, const LeviDescriptor& levi) {
  require_center_support(lambda, levi);
  const Weight shifted = lambda + rho(levi.spec, levi);
  for (const auto& alpha : roots(levi.spec)) {
    if (pairing(lambda, alpha).is_real_positive() && !pairing(shifted, alpha).is_real_positive()) return false;
  }
  return true;
}

bool in_Xi(const Weight& xi, const LeviDescriptor& levi, const Rational& d) {
  if (sgn(d) <= 0) throw PreconditionViolation("Xi radius must be positive");
  if (xi.size() != static_cast<std::size_t>(levi.spec.rank)) throw DimensionError("weight rank does not match the Levi");
  const Rational bound = d * d;
  for (const auto& alpha : levi.complement_roots())
    if (pairing(xi, alpha).modulus_squared() < bound) return true;
  return false;
}

bool PolarizationClass::contains(const Root& alpha) const {
  return std::find(in_n.begin(), in_n.end(), alpha) != in_n.end();
}

PolarizationClass polarization_class(const Weight& lambda, const LeviDescriptor& levi) {
  require_center_support(lambda, levi);
  PolarizationClass pc;
  for (const auto& alpha : levi.complement_roots()) {
    const ComplexRational z = pairing(lambda, alpha);
    if (z.is_zero()) throw PreconditionViolation("polarization needs a Z-regular parameter (vanishing pairing on " + to_string(alpha) + ")");
    const bool positive = sgn(z.im) > 0 || (sgn(z.im) == 0 && sgn(z.re) > 0);
    (positive ? pc.in_n : pc.in_minus_n).push_back(alpha);
  }
  return pc;
}

}  // namespace lieplan
