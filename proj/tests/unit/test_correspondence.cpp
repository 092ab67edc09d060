#include <doctest.h>

#include "ffpat/correspondence.hpp"
#include "ffpat/family.hpp"

#include <map>

using namespace ffpat;

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("layout examples") {
  const auto a = layout(Pattern::parse("1^5", 5));
  REQUIRE(a.windows.size() == 5);
  for (unsigned j = 1; j <= 5; ++j) CHECK(a.ell(1, j) == j - 1);
  const auto b = layout(Pattern::parse("5^1", 5));
  REQUIRE(b.windows.size() == 1);
  CHECK(b.ell(5, 1) == 0);
  const auto c = layout(Pattern::parse("1^1 3^1", 4));
  CHECK(c.ell(1, 1) == 0);
  CHECK(c.ell(3, 1) == 1);
  CHECK_THROWS(c.ell(2, 1));
  for (unsigned n = 1; n <= 8; ++n) {
    for (const auto& lam : enumerate_patterns(n)) {
      std::vector<int> cover(n, 0);
      for (const auto& w : layout(lam).windows) {
        for (unsigned k = 0; k < w.degree; ++k) ++cover[w.ell + k];
      }
      for (int v : cover) CHECK(v == 1);
    }
  }
}

TEST_CASE("type-lambda arrays") {
  const auto ones = layout(Pattern::parse("1^3", 3));
  for (std::uint32_t a = 0; a < 5; ++a) CHECK(is_type_lambda(std::vector<std::uint32_t>{a, a, 1}, ones));
  const auto two = layout(Pattern::parse("2^1", 2));
  CHECK_FALSE(is_type_lambda(std::vector<std::uint32_t>{3, 3}, two));
  int count = 0;
  for (std::uint32_t a = 0; a < 5; ++a) {
    for (std::uint32_t b = 0; b < 5; ++b) count += is_type_lambda(std::vector<std::uint32_t>{a, b}, two) ? 1 : 0;
  }
  CHECK(count == 20);
  CHECK(is_cycle(std::vector<std::uint32_t>{0, 0, 1, 0, 0, 1, 0, 0, 2}));
  CHECK_FALSE(is_cycle(std::vector<std::uint32_t>{0, 0, 1, 0, 0, 1, 0, 0, 1}));
  CHECK_FALSE(is_cycle(std::vector<std::uint32_t>{1, 2, 1, 2}));
}

TEST_CASE("G for linear windows is the product of (T - x_k)") {
  const auto f = make_fq(5, 1);
  const Tower tower(f, 3);
  const auto lay = layout(Pattern::parse("1^3", 3));
  for (std::uint64_t idx = 0; idx < 125; ++idx) {
    std::vector<std::uint32_t> x(3);
    vector_at(idx, 5, x);
    MonicPoly expect;
    for (const auto v : x) expect = poly_mul(*f, expect, MonicPoly::from_lower({f->neg(v)}));
    CHECK(build_G(tower, lay, x) == expect);
  }
}

TEST_CASE("G for a 2-cycle is the minimal polynomial of alpha") {
  const auto f = make_fq(5, 1);
  const Tower tower(f, 2);
  const auto& ctx = tower.layer(2);
  const auto& k = *ctx.field;
  const auto lay = layout(Pattern::parse("2^1", 2));
  for (std::uint32_t a = 0; a < 5; ++a) {
    for (std::uint32_t b = 0; b < 5; ++b) {
      if (a == b) continue;
      const std::vector<std::uint32_t> x{a, b};
      // alpha = a theta + b theta^5; minimal polynomial T^2 - (alpha + alpha^5) T + alpha^6.
      const ExtElem theta = ctx.theta;
      const ExtElem alpha = k.add(k.scale(a, theta), k.scale(b, k.pow(theta, 5)));
      const ExtElem tr = k.add(alpha, k.pow(alpha, 5));
      const ExtElem nm = k.pow(alpha, 6);
      const auto g = build_G(tower, lay, x);
      CHECK(g.coeff(1) == f->neg(k.to_base(tr)));
      CHECK(g.coeff(0) == k.to_base(nm));
      CHECK(factor_pattern(*f, g).to_string() == "2^1");
    }
  }
}

TEST_CASE("pattern of G equals lambda exactly for type-lambda x at (5, 4)") {
  const auto f = make_fq(5, 1);
  const Tower tower(f, 4);
  for (const auto& lam : enumerate_patterns(4)) {
    const auto lay = layout(lam);
    for (std::uint64_t idx = 0; idx < 625; ++idx) {
      std::vector<std::uint32_t> x(4);
      vector_at(idx, 5, x);
      const auto g = build_G(tower, lay, x);
      CHECK((factor_pattern(*f, g) == lam) == is_type_lambda(x, lay));
    }
  }
}

TEST_CASE("verify_correspondence on the small grid, serial and parallel agree") {
  for (auto [p, n] : std::vector<std::pair<unsigned, unsigned>>{{5, 3}, {5, 4}, {7, 3}, {3, 4}}) {
    const auto f = make_fq(p, 1);
    const Tower tower(f, n);
    const auto par = verify_correspondence(tower, n, kDefaultScanBudget, 4);
    const auto ser = verify_correspondence_serial(tower, n);
    CHECK(par.passed());
    CHECK(ser.passed());
    CHECK(par.pairs == ser.pairs);
    CHECK(par.squarefree_checked == ser.squarefree_checked);
    CHECK(par.nonsquarefree_fibers == ser.nonsquarefree_fibers);
    CHECK(par.counterexamples.empty());
    // Every square-free monic polynomial is checked under exactly one lambda.
    CHECK(par.squarefree_checked == upow(p, n) - upow(p, n - 1));
  }
}

TEST_CASE("partition identity over type-lambda arrays") {
  // sum_lambda #{x of type lambda, G(x,T) square-free} / w(lambda) = q^n - q^{n-1}.
  const auto f = make_fq(5, 1);
  const unsigned n = 4;
  const Tower tower(f, n);
  Rational total = 0;
  std::uint64_t all_type = 0;
  for (const auto& lam : enumerate_patterns(n)) {
    const auto lay = layout(lam);
    std::uint64_t sq = 0;
    for (std::uint64_t idx = 0; idx < 625; ++idx) {
      std::vector<std::uint32_t> x(n);
      vector_at(idx, 5, x);
      if (!is_type_lambda(x, lay)) continue;
      ++all_type;
      sq += is_squarefree(*f, build_G(tower, lay, x)) ? 1 : 0;
    }
    total += Rational(BigInt(sq), pattern_weight(lam));
  }
  CHECK(total == 625 - 125);
  CHECK(all_type > 625);
}

TEST_CASE("fiber_count examples") {
  const auto f = make_fq(5, 1);
  const Tower tower(f, 3);
  const auto lam = Pattern::parse("1^1 2^1", 3);
  // (T - 1)(T^2 + 2): T^2 + 2 has no root mod 5.
  const auto g = poly_mul(*f, MonicPoly::from_lower({4}), MonicPoly::from_lower({2, 0}));
  REQUIRE(is_squarefree(*f, g));
  CHECK(fiber_count(tower, g, lam) == 2);
  CHECK(fiber_count(tower, g, Pattern::parse("1^3", 3)) == 0);
  const auto cube = MonicPoly::from_lower({0, 0, 0});
  CHECK(fiber_count(tower, cube, Pattern::parse("1^3", 3)) == 1);
  CHECK_THROWS_AS(fiber_count(tower, g, lam, 10), BudgetExceeded);
}

TEST_CASE("corrupted basis matrix trips the Frobenius check") {
  const auto f = make_fq(5, 1);
  Tower tower(f, 2);
  ExtCtx bad = tower.layer(2);
  bad.a[1] = bad.a[0];
  tower.replace_layer(bad);
  const auto lay = layout(Pattern::parse("2^1", 2));
  CHECK_THROWS_AS(build_G(tower, lay, std::vector<std::uint32_t>{1, 0}), FrobeniusFault);
}
