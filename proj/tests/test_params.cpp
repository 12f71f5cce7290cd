#include <doctest.h>

#include <set>

#include "frob/errors.hpp"
#include "frob/oracle.hpp"
#include "frob/params.hpp"
#include "frob/walk.hpp"
#include "support.hpp"

using frob::Int;

namespace {

frob::CaseParams params_of(std::int64_t a, std::int64_t b, std::int64_t c) {
  return frob::compute_case_params(frob::make_triple(a, b, c));
}

std::vector<std::int64_t> as_i64(const std::vector<Int>& v) {
  std::vector<std::int64_t> out;
  for (Int x : v) out.push_back(x.to_i64());
  return out;
}

}  // namespace

TEST_CASE("make_triple sorts, deduplicates and validates") {
  const frob::Triple t = frob::make_triple(16, 11, 15);
  CHECK(t.a() == 11);
  CHECK(t.b() == 15);
  CHECK(t.c() == 16);
  CHECK(t.pairwise_coprime());

  CHECK_THROWS_AS(frob::make_triple(4, 6, 8), frob::InvalidInput);
  CHECK_THROWS_AS(frob::make_triple(0, 6, 7), frob::InvalidInput);
  CHECK_THROWS_AS(frob::make_triple(1, 6, 7), frob::InvalidInput);

  const frob::Triple j = frob::make_triple(6, 10, 15);
  CHECK(j.size() == 3);
  CHECK_FALSE(j.pairwise_coprime());

  const frob::Triple d = frob::make_triple(5, 7, 5);
  CHECK(d.size() == 2);
  CHECK_FALSE(d.is_proper());
  CHECK_THROWS_AS(d.c(), frob::InvalidInput);
}

TEST_CASE("compute_base") {
  auto base = frob::compute_base(frob::make_triple(11, 15, 16));
  CHECK(base.k == 1);
  CHECK(base.ell == 4);
  base = frob::compute_base(frob::make_triple(7, 9, 100));
  CHECK(base.k == 11);
  CHECK(base.ell == 1);
  base = frob::compute_base(frob::make_triple(3, 4, 5));
  CHECK(base.k == 1);
  CHECK(base.ell == 2);
  CHECK_THROWS_AS(frob::compute_base(frob::make_triple(6, 10, 15)), frob::InvalidInput);
}

TEST_CASE("compute_case_params: br < cq") {
  const auto p = params_of(3, 4, 5);
  CHECK(p.q == 3);
  CHECK(p.r == 0);
  REQUIRE(p.lambda);
  CHECK(*p.lambda == 1);
  CHECK_FALSE(p.step);
}

TEST_CASE("compute_case_params: (11, 15, 16)") {
  const auto p = params_of(11, 15, 16);
  CHECK(p.q == 1);
  CHECK(p.r == 4);
  CHECK(p.b * p.r == 60);
  CHECK(p.c * p.q == 16);
  REQUIRE(p.step);
  const auto& st = *p.step;
  CHECK(st.u == 3);
  CHECK(st.A == 44);
  CHECK(st.B == 77);
  CHECK(st.Lambda == 1);
  CHECK(st.Delta == 0);
  CHECK(st.LambdaP == 0);
  CHECK(st.DeltaP == 1);
  CHECK(st.mu == 0);
}

TEST_CASE("compute_case_params: (100, 101, 139)") {
  const auto p = params_of(100, 101, 139);
  CHECK(frob::mod(p.b * p.ell - p.c, p.a) == 0);
  CHECK(p.ell == 39);
  CHECK(p.q == 1);
  CHECK(p.r == 39);
  REQUIRE(p.step);
  CHECK(p.step->s == 22);
  CHECK(p.step->A == 3800);
  CHECK(p.step->B == 2500);
  CHECK(p.step->u == 22);
  CHECK(p.step->mu == 4);
  CHECK_THROWS_AS(params_of(7, 9, 100), frob::InvalidInput);
}

TEST_CASE("compute_mu") {
  CHECK(frob::compute_mu(3800, 2500, 39, 22) == 4);
  CHECK(frob::compute_mu(44, 77, 4, 3) == 0);
  CHECK(frob::compute_mu(5, 25, 2, 1) == 0);
  CHECK_THROWS_AS(frob::compute_mu(0, 1, 1, 1), frob::InvalidInput);
}

TEST_CASE("build_xset") {
  auto xd = frob::build_xset(params_of(100, 101, 139));
  CHECK(as_i64(xd.xs) == std::vector<std::int64_t>{39, 17, 34, 12, 29});
  CHECK(as_i64(xd.ys) == std::vector<std::int64_t>{1, 3, 6, 8, 11});
  CHECK(xd.xhat == 12);
  CHECK(xd.m_index == 3);
  CHECK(xd.x_mu == 29);
  REQUIRE(xd.w_index);
  CHECK(*xd.w_index == 1);
  CHECK(xd.gap1 == 12);
  CHECK(xd.gap2 == 5);

  xd = frob::build_xset(params_of(11, 15, 16));
  CHECK(as_i64(xd.xs) == std::vector<std::int64_t>{4});
  CHECK(as_i64(xd.ys) == std::vector<std::int64_t>{1});
  CHECK(xd.xhat == 4);
  CHECK(xd.m_index == 0);

  xd = frob::build_xset(params_of(5, 7, 9));
  CHECK(as_i64(xd.xs) == std::vector<std::int64_t>{2});
  CHECK(as_i64(xd.ys) == std::vector<std::int64_t>{1});

  CHECK_THROWS_AS(frob::build_xset(params_of(3, 4, 5)), frob::InvalidInput);
}

TEST_CASE("classify") {
  using frob::Case;
  CHECK(frob::classify(frob::make_triple(7, 9, 100)).principal == Case::Sylvester);
  const auto l = frob::classify(frob::make_triple(11, 15, 16));
  CHECK(l.principal == Case::Thm5A);
  CHECK(l.lambda_gt_delta);
  CHECK(l.deltap_gt_lambdap);
  CHECK(frob::classify(frob::make_triple(100, 101, 139)).principal == Case::Thm5B);
  CHECK(frob::classify(frob::make_triple(3, 4, 5)).principal == Case::Thm3);
  CHECK(frob::to_string(Case::MuBoundary) == "MU_BOUNDARY");
}

TEST_CASE("sweep invariants up to 60") {
  std::size_t branch_checked = 0, thm5b = 0;
  frob::testing::for_each_walkable(60, [&](const frob::CaseParams& p) {
    const Int a = p.a, ell = p.ell;
    REQUIRE(a == p.q * (a - ell) + p.r);
    REQUIRE(frob::mod(p.r - ell, a - ell) == 0);
    REQUIRE(p.r <= ell);
    REQUIRE(p.c - p.b * ell < 0);
    REQUIRE(frob::gcd(a, ell) == 1);
    REQUIRE(p.b * p.r != p.c * p.q);

    if (p.br_below_cq()) {
      REQUIRE(p.r < ell);
      REQUIRE(a - ell <= ell);
      return;
    }
    const auto& st = *p.step;
    REQUIRE(st.u >= 1);
    REQUIRE(st.u < p.r);
    REQUIRE(st.A > 0);
    REQUIRE(st.B > 0);
    REQUIRE(st.A != st.B);
    ++branch_checked;

    const frob::XSetData xd = frob::build_xset(p);
    const std::set<Int> generated(xd.xs.begin(), xd.xs.end());
    REQUIRE(generated == frob::xset_oracle(p));
    REQUIRE(xd.xs.front() == p.r);

    const Int fl = p.floor_r_over_u();
    if (st.mu < fl) {
      std::set<Int> linear;
      for (Int t = 0; t <= st.mu; t += 1) linear.insert(p.r - st.u * t);
      REQUIRE(linear == generated);
    }
    if (st.Lambda > st.Delta || st.DeltaP > st.LambdaP) {
      REQUIRE(st.mu == st.Delta);
      REQUIRE(st.mu < fl);
    }
    if (st.mu > fl) {
      ++thm5b;
      Int above = p.r + 1;
      for (Int x : generated)
        if (x > st.u) above = frob::min(above, x);
      REQUIRE(xd.x_mu == above);
      REQUIRE(xd.m_index >= 1);
      REQUIRE(xd.w_index);
      for (auto it = std::next(generated.begin()); it != generated.end(); ++it) {
        const Int gap = *it - *std::prev(it);
        REQUIRE((gap == xd.gap1 || gap == xd.gap2));
      }
      REQUIRE(*xd.w_index <= static_cast<std::size_t>(st.mu.to_i64()));
      REQUIRE(generated.count(xd.xs[*xd.w_index] + xd.xhat));
      for (std::size_t i = *xd.w_index + 1; i < xd.xs.size(); ++i)
        REQUIRE_FALSE(generated.count(xd.xs[i] + xd.xhat));
    }

    Int first_moved = -1;
    for (Int x = 1; x <= p.r && first_moved < 0; x += 1)
      if (frob::m_of(x, p) != p.b * x) first_moved = x;
    REQUIRE(*generated.begin() == first_moved);
  });
  CHECK(branch_checked > 0);
  CHECK(thm5b > 0);
}
