#include <cmath>

#include "doctest.h"
#include "lieplan/errors.hpp"
#include "lieplan/oracle.hpp"

using namespace lieplan;

namespace {

BlockSpec spec(std::initializer_list<Block> blocks) { return BlockSpec{std::vector<Block>(blocks)}; }

}  // namespace

TEST_CASE("strata_bruteforce examples") {
  const OracleConfig cfg;
  const SpaceSpec s21{GroupFamily::Sp, 2, 1, 0};
  CHECK(admitted_s1(strata_bruteforce(s21, {2, 0, 0}, cfg)) == std::vector<int>{1});
  const SpaceSpec s32{GroupFamily::Sp, 3, 2, 0};
  CHECK(std::holds_alternative<EmptyRegion>(strata_bruteforce(s32, {1, 0, 1}, cfg).region));
  const SpaceSpec s30{GroupFamily::Sp, 3, 0, 0};
  CHECK(admitted_s1(strata_bruteforce(s30, {3, 0, 0}, cfg)) == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(strata_bruteforce({GroupFamily::Sp, 6, 1, 0}, {6, 0, 0}, cfg), CapabilityError);
}

TEST_CASE("numeric_signature examples") {
  CHECK(numeric_signature(Matrix::identity(3), 1e-8) == SignaturePair{3, 0});
  CHECK(numeric_signature(Matrix{{1, 0}, {0, -1}}, 1e-8) == SignaturePair{1, 1});
  const Realization r = realize(spec({Elliptic2{1}, Elliptic2{-2}}));
  CHECK(numeric_signature(gram_of(r.a, r.space), 1e-8) == SignaturePair{2, 2});
  CHECK(numeric_signature(std::vector<double>{0, 1, 1, 0}, 2, 1e-8) == SignaturePair{1, 1});
}

TEST_CASE("signature corpus agrees with exact inertia") {
  OracleConfig cfg;
  const auto corpus = gram_corpus(cfg);
  CHECK(corpus.size() > 100);
  for (const auto& g : corpus) CHECK(numeric_signature(g, cfg.float_tolerance) == signature(g));
}

TEST_CASE("randomized_witness_search") {
  OracleConfig cfg;
  cfg.trials = 200;
  const Realization yes = realize(spec({Elliptic2{1}, Elliptic2{-3}}));
  const auto w = randomized_witness_search(yes.a, yes.space, 1, cfg);
  REQUIRE(w.has_value());
  CHECK(verify_witness(yes.a, yes.space, *w, 1));
  const Realization no = realize(spec({Elliptic2{1}, Elliptic2{2}}));
  CHECK_FALSE(randomized_witness_search(no.a, no.space, 1, cfg).has_value());
  const auto empty = randomized_witness_search(no.a, no.space, 0, cfg);
  REQUIRE(empty.has_value());
  CHECK(empty->basis.empty());
}

TEST_CASE("randomized_witness_search finds witnesses for most members") {
  OracleConfig cfg;
  cfg.trials = 64;
  const std::vector<Rational> params = {1, -1, 2, -2};
  std::size_t members = 0, found = 0;
  for (const auto& b : enumerate_block_specs(3, params)) {
    const Realization r = realize(b);
    for (std::size_t m = 1; m <= b.half_dim(); ++m) {
      const bool member = sp_membership(r.a, r.space, m);
      const auto w = randomized_witness_search(r.a, r.space, m, cfg);
      if (!member) CHECK_FALSE(w.has_value());
      members += member;
      found += w.has_value();
    }
  }
  CHECK(members > 0);
  CHECK(static_cast<double>(found) >= 0.9 * static_cast<double>(members));
}

TEST_CASE("ac_sample examples") {
  std::vector<Vector> ray;
  for (int t = 1; t <= 100; ++t) ray.push_back({t, 0});
  const auto d1 = ac_sample(ray, 10.0);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0][0] == doctest::Approx(1.0));
  CHECK(d1[0][1] == doctest::Approx(0.0));

  std::vector<Vector> two;
  for (int t = 1; t <= 50; ++t) {
    two.push_back({t, t});
    two.push_back({-t, -t});
  }
  const auto d2 = ac_sample(two, 10.0);
  REQUIRE(d2.size() == 2);
  CHECK(d2[0][0] == doctest::Approx(-d2[1][0]));
  CHECK(std::fabs(d2[0][0]) == doctest::Approx(std::sqrt(0.5)));

  const std::vector<Vector> bounded = {{1, 2}, {-2, 1}, {0, 3}};
  CHECK(ac_sample(bounded, OracleConfig{}).empty());
  CHECK_THROWS_AS(ac_sample(std::vector<Vector>{}, 1.0), InvalidSpec);
}

TEST_CASE("weyl_bruteforce_intersect examples") {
  const RootSystemSpec C2{RootFamily::C, 2};
  AffinePattern pinned{Weight::real({2, 1}), {true, true}};
  CHECK(weyl_bruteforce_intersect(C2, Weight::real({2, 1}), pinned));
  CHECK_FALSE(weyl_bruteforce_intersect(C2, Weight::real({3, 3}), pinned));
  CHECK(weyl_bruteforce_intersect(C2, Weight::real({3, 3}), AffinePattern::whole_space(2)));
  CHECK_THROWS_AS(weyl_bruteforce_intersect({RootFamily::C, 7}, Weight(7), AffinePattern::whole_space(7)),
                  CapabilityError);
}

TEST_CASE("enumerate_block_specs") {
  const std::vector<Rational> params = {1, -1};
  const auto specs = enumerate_block_specs(2, params);
  for (const auto& b : specs) {
    CHECK(b.half_dim() >= 1);
    CHECK(b.half_dim() <= 2);
  }
  // half dim 1: ell2 x2, hyp2 x2, zero2 -> 5; half dim 2 adds pairs of those (15) and quad4 (4)
  CHECK(specs.size() == 24);
}

TEST_CASE("oracle suite is seed-deterministic and agrees") {
  OracleConfig cfg;
  cfg.trials = 4;
  const OracleReport a = run_oracle_suite("all", cfg);
  const OracleReport b = run_oracle_suite("all", cfg);
  CHECK(a.agree);
  CHECK(a.mismatches.empty());
  CHECK(a.checks == b.checks);
  CHECK(a.checks > 0);
  CHECK_THROWS_AS(run_oracle_suite("bogus", cfg), InvalidSpec);
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidSpec);
}
