#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lieplan/errors.hpp"
#include "lieplan/oracle.hpp"
#include "lieplan/rootsys.hpp"

using namespace lieplan;

namespace {

const RootSystemSpec C2{RootFamily::C, 2};
const RootSystemSpec C3{RootFamily::C, 3};

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("root counts") {
  CHECK(roots({RootFamily::C, 1}).size() == 2);
  CHECK(roots({RootFamily::A, 3}).size() == 6);
  CHECK(roots(C2).size() == 8);
  for (int n = 1; n <= 6; ++n) {
    CHECK(roots({RootFamily::C, n}).size() == static_cast<std::size_t>(2 * n * n));
    CHECK(roots({RootFamily::A, n}).size() == static_cast<std::size_t>(n * (n - 1)));
    CHECK(positive_roots({RootFamily::C, n}).size() == static_cast<std::size_t>(n * n));
  }
  const auto c1 = roots({RootFamily::C, 1});
  CHECK(std::find(c1.begin(), c1.end(), Root::two_eps(0)) != c1.end());
  CHECK(std::find(c1.begin(), c1.end(), Root::two_eps(0, -1)) != c1.end());
  CHECK_THROWS_AS(roots({RootFamily::C, 0}), InvalidSpec);
}

TEST_CASE("roots are closed under negation and distinct") {
  for (int n = 1; n <= 5; ++n)
    for (auto fam : {RootFamily::A, RootFamily::C}) {
      const auto rs = roots({fam, n});
      const std::set<Root> set(rs.begin(), rs.end());
      CHECK(set.size() == rs.size());
      for (const auto& r : rs) CHECK(set.count(r.negated()) == 1);
    }
}

TEST_CASE("root printing and parsing") {
  CHECK(to_string(Root::eps_diff(0, 1)) == "e1-e2");
  CHECK(to_string(Root::eps_diff(0, 1, -1)) == "-e1+e2");
  CHECK(to_string(Root::eps_sum(1, 2, -1)) == "-e2-e3");
  CHECK(to_string(Root::two_eps(3, -1)) == "-2e4");
  CHECK(Root::eps_diff(1, 0) == Root::eps_diff(0, 1, -1));
  for (const auto& r : roots(C3)) CHECK(parse_root(to_string(r)) == r);
  CHECK_THROWS_AS(parse_root("e1*e2"), ParseError);
  CHECK(root_from_coefficients(C2, {1, 1}) == Root::eps_sum(0, 1));
  CHECK(root_from_coefficients(C2, {0, -2}) == Root::two_eps(1, -1));
  CHECK_FALSE(root_from_coefficients(C2, {1, 0}).has_value());
  CHECK_FALSE(root_from_coefficients({RootFamily::A, 2}, {1, 1}).has_value());
}

TEST_CASE("pairing examples") {
  const Weight lambda = Weight::imaginary(vec({1, 2}));
  CHECK(pairing(lambda, Root::eps_diff(0, 1)).im == -1);
  CHECK(pairing(lambda, Root::eps_diff(0, 1)).re == 0);
  CHECK(pairing(lambda, Root::two_eps(1)).im == 2);
  for (const auto& r : roots(C2)) CHECK(pairing(Weight(2), r).is_zero());
  const Weight mixed(vec({3, 0}), vec({0, 1}));
  CHECK(pairing(mixed, Root::eps_sum(0, 1)) == ComplexRational{3, 1});
}

TEST_CASE("rho examples") {
  CHECK(rho(C2) == Weight::real(vec({2, 1})));
  CHECK(rho(C3, LeviDescriptor::cartan(C3)) == Weight(3));
  CHECK(rho(C3, LeviDescriptor::with_abelian(C3, 2)) == Weight::real(vec({0, 0, 1})));
  CHECK(rho({RootFamily::A, 3}) == Weight::real(Vector{1, 0, -1}));
}

TEST_CASE("Levi descriptors") {
  const auto l = LeviDescriptor::with_abelian(C3, 2);
  CHECK(l.tail_size() == 1);
  CHECK(l.levi_roots().size() == 2);
  CHECK(l.complement_roots().size() == 16);
  CHECK(LeviDescriptor::full(C3).complement_roots().empty());
  CHECK(LeviDescriptor::cartan(C3).levi_roots().empty());
  const auto a = LeviDescriptor::with_abelian({RootFamily::A, 4}, 1);
  CHECK(a.levi_roots().size() == 6);
  CHECK_THROWS_AS(LeviDescriptor::with_abelian(C3, 4), InvalidSpec);
}

TEST_CASE("weyl_canonical examples") {
  CHECK(weyl_canonical(C2, Weight::real(vec({-1, 3}))) == Weight::real(vec({3, 1})));
  CHECK(weyl_canonical({RootFamily::A, 3}, Weight::real(vec({2, 5, 2}))) == Weight::real(vec({5, 2, 2})));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Weight w(Vector{d(rng), d(rng), d(rng)}, Vector{d(rng), d(rng), d(rng)});
    for (auto fam : {RootFamily::A, RootFamily::C}) {
      const RootSystemSpec spec{fam, 3};
      const Weight c = weyl_canonical(spec, w);
      CHECK(weyl_canonical(spec, c) == c);
    }
  }
}

TEST_CASE("weyl_orbit_intersects_affine examples") {
  AffinePattern pinned{Weight::real(vec({2, 1})), {true, true}};
  CHECK(weyl_orbit_intersects_affine(C2, Weight::real(vec({2, 1})), pinned));
  CHECK(weyl_orbit_intersects_affine(C2, Weight::real(vec({-1, -2})), pinned));
  CHECK_FALSE(weyl_orbit_intersects_affine(C2, Weight::real(vec({3, 3})), pinned));
  for (const auto& xi : {Weight::real(vec({3, 3})), Weight::imaginary(vec({7, -1}))})
    CHECK(weyl_orbit_intersects_affine(C2, xi, AffinePattern::whole_space(2)));
  // A has no sign changes
  CHECK_FALSE(weyl_orbit_intersects_affine({RootFamily::A, 2}, Weight::real(vec({-1, -2})), pinned));
  CHECK_THROWS_AS(weyl_orbit_intersects_affine({RootFamily::C, 9}, Weight(9), AffinePattern::whole_space(9)),
                  CapabilityError);
}

TEST_CASE("weyl matching agrees with brute force on random cases") {
  for (int n = 1; n <= 4; ++n)
    for (auto fam : {RootFamily::A, RootFamily::C}) {
      const RootSystemSpec spec{fam, n};
      int hits = 0;
      for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const WeylCase c = random_weyl_case(spec, seed);
        const bool fast = weyl_orbit_intersects_affine(spec, c.xi, c.pattern);
        CHECK(fast == weyl_bruteforce_intersect(spec, c.xi, c.pattern));
        hits += fast;
      }
      CHECK(hits > 0);
      CHECK(hits < 60);
    }
}
