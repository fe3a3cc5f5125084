#pragma once

// Levi-level predicates on parameters lambda in Z(l)^*: regularity, the
// good range, proximity to walls (the set Xi(l, d)) and the polarization
// class selected by the signs of the coroot pairings.

#include <vector>

#include "lieplan/rootsys.hpp"

namespace lieplan {

/// Throws SupportError unless lambda lies in Z(l)^*: constant on the tail
/// block for family A, zero there for family C (Z(sp) = 0).
void require_center_support(const Weight& lambda, const LeviDescriptor& levi);

bool in_center(const Weight& lambda, const LeviDescriptor& levi);

/// <lambda, alpha^vee> != 0 for every root outside Delta(l).
bool is_Zreg(const Weight& lambda, const LeviDescriptor& levi);

/// For every root alpha of g: a real positive <lambda, alpha^vee> forces
/// <lambda + rho_l, alpha^vee> to be real positive. All roots are tested,
/// not only a positive system.
bool good_range(const Weight& lambda, const LeviDescriptor& levi);

/// Some root outside Delta(l) has |<xi, alpha^vee>| < d, compared as
/// re^2 + im^2 < d^2. xi is the already shifted value in Z(l)^* + rho_l.
bool in_Xi(const Weight& xi, const LeviDescriptor& levi, const Rational& d);

/// Assignment of each root outside Delta(l) to n or to its opposite.
struct PolarizationClass {
  std::vector<Root> in_n;
  std::vector<Root> in_minus_n;

  bool contains(const Root& alpha) const;
};

/// alpha goes to n iff Im<lambda, alpha^vee> > 0, or it vanishes and
/// Re<lambda, alpha^vee> > 0. Requires a Z-regular lambda.
PolarizationClass polarization_class(const Weight& lambda, const LeviDescriptor& levi);

}  // namespace lieplan
