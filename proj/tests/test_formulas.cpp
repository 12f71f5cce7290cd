#include <doctest.h>

#include <array>

#include "frob/errors.hpp"
#include "frob/formulas.hpp"
#include "frob/oracle.hpp"
#include "frob/walk.hpp"
#include "support.hpp"

using frob::Int;
using frob::testing::i64;

namespace {

frob::CaseParams params_of(i64 a, i64 b, i64 c) {
  return frob::compute_case_params(frob::make_triple(a, b, c));
}

Int g_of(i64 a, i64 b, i64 c, frob::Strategy s = frob::Strategy::Auto) {
  return frob::frobenius(frob::make_triple(a, b, c), s).g;
}

}  // namespace

TEST_CASE("sylvester_g") {
  CHECK(frob::sylvester_g(2, 3) == 1);
  CHECK(frob::sylvester_g(1, 9) == -1);
  CHECK(frob::sylvester_g(7, 9) == 47);
  CHECK_THROWS_AS(frob::sylvester_g(4, 6), frob::InvalidInput);
}

TEST_CASE("johnson_reduce") {
  auto red = frob::johnson_reduce(frob::make_triple(4, 6, 9));
  REQUIRE(red.steps.size() == 2);
  CHECK(red.steps[0].d == 3);
  CHECK(red.steps[0].third == 4);
  CHECK(red.steps[1].d == 2);
  CHECK(red.reduced.has_unit());

  red = frob::johnson_reduce(frob::make_triple(6, 10, 15));
  CHECK(!red.steps.empty());
  CHECK(red.reduced.pairwise_coprime());

  red = frob::johnson_reduce(frob::make_triple(3, 4, 5));
  CHECK(red.steps.empty());
  CHECK(red.reduced == frob::make_triple(3, 4, 5));
}

TEST_CASE("thm3_g covers both branches") {
  CHECK(frob::thm3_g(params_of(3, 4, 5)) == 2);
  CHECK(frob::thm3_g(params_of(7, 8, 11)) == 20);
  CHECK(frob::thm3_g(params_of(8, 9, 13)) == 28);
  CHECK_THROWS_AS(frob::thm3_g(params_of(11, 15, 16)), frob::InvalidInput);
}

TEST_CASE("thm5a_g and its shortcuts") {
  for (auto [a, b, c, g] : {std::array<i64, 4>{5, 7, 9, 13}, {11, 15, 16, 51}}) {
    const auto p = params_of(a, b, c);
    CHECK(frob::thm5a_g(p) == g);
    CHECK(frob::thm5a_shortcut_lambda_gt_delta(p) == g);
    CHECK(frob::thm5a_shortcut_deltap_gt_lambdap(p) == g);
  }
  CHECK_THROWS_AS(frob::thm5a_g(params_of(100, 101, 139)), frob::InvalidInput);
}

TEST_CASE("thm5b_g") {
  const auto p = params_of(100, 101, 139);
  CHECK(frob::thm5b_g(p, frob::build_xset(p)) == 1972);
  CHECK(frob::frobenius_sieve(frob::make_triple(100, 101, 139)) == 1972);
  const auto q = params_of(11, 15, 16);
  CHECK_THROWS_AS(frob::thm5b_g(q, frob::build_xset(q)), frob::InvalidInput);
}

TEST_CASE("thm6b_g is absent outside its guard") {
  CHECK_FALSE(frob::thm6b_g(frob::make_triple(7, 9, 100)).has_value());
  CHECK_FALSE(frob::thm6b_g(frob::make_triple(11, 15, 16)).has_value());
}

TEST_CASE("frobenius dispatch") {
  auto res = frob::frobenius(frob::make_triple(6, 10, 15));
  CHECK(res.g == 29);
  CHECK(res.reduction.size() >= 1);
  res = frob::frobenius(frob::make_triple(7, 9, 100));
  CHECK(res.g == 47);
  CHECK(res.label.principal == frob::Case::Sylvester);
  res = frob::frobenius(frob::make_triple(100, 101, 139));
  CHECK(res.g == 1972);
  CHECK(res.label.principal == frob::Case::Thm5B);
  CHECK(res.method == frob::Method::Formula);
  CHECK(g_of(4, 6, 9) == 11);
  CHECK(g_of(2, 6, 9) == 7);
  CHECK(g_of(5, 5, 7) == 23);
  CHECK(g_of(2, 3, 4) == 1);

  for (auto s : {frob::Strategy::Formula, frob::Strategy::Brauer, frob::Strategy::Lemma3,
                 frob::Strategy::Sieve}) {
    CHECK(g_of(11, 15, 16, s) == 51);
    CHECK(g_of(6, 10, 15, s) == 29);
  }
  CHECK(frob::frobenius(frob::make_triple(11, 15, 16), frob::Strategy::Brauer).method ==
        frob::Method::Brauer);
  CHECK(frob::parse_strategy("lemma3") == frob::Strategy::Lemma3);
  CHECK_FALSE(frob::parse_strategy("magic").has_value());
}

TEST_CASE("formula properties up to 50") {
  frob::testing::for_each_walkable(50, [](const frob::CaseParams& p) {
    const Int g = frob::brauer_shockley_g(p);
    const frob::CaseLabel label = frob::classify(p);
    if (p.br_below_cq()) {
      REQUIRE(frob::thm3_g(p) == g);
      const Int a = p.a, b = p.b, c = p.c, ell = p.ell, q = p.q, r = p.r, lam = *p.lambda;
      if (lam * (b * (a - ell) + c) == c * (q - 1) - b * r)
        REQUIRE(b * ((lam + 1) * (a - ell) + r - 1) == b * (a - ell - 1) + c * (q - lam - 1));
    } else if (label.principal == frob::Case::Thm5A) {
      REQUIRE(frob::thm5a_g(p) == g);
      if (label.lambda_gt_delta) REQUIRE(frob::thm5a_shortcut_lambda_gt_delta(p) == g);
      if (label.deltap_gt_lambdap) REQUIRE(frob::thm5a_shortcut_deltap_gt_lambdap(p) == g);
    } else if (label.principal == frob::Case::Thm5B) {
      REQUIRE(frob::thm5b_g(p, frob::build_xset(p)) == g);
    }
    if (const auto mirror = frob::thm6b_g(p)) REQUIRE(*mirror == g);
  });
}

TEST_CASE("reduction steps unwind to the sieve value") {
  for (i64 c = 4; c <= 40; ++c)
    for (i64 b = 3; b < c; ++b)
      for (i64 a = 2; a < b; ++a) {
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        const auto res = frob::frobenius(frob::make_triple(a, b, c));
        for (const auto& step : res.reduction) {
          const Int child = frob::frobenius_sieve(step.child);
          REQUIRE(step.unwind(child) == frob::frobenius_sieve(step.parent));
        }
        REQUIRE(res.g >= -1);
      }
}
