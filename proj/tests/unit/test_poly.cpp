#include <doctest.h>

#include "ffpat/poly.hpp"

#include <map>
#include <random>

using namespace ffpat;

namespace {

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::int64_t necklace(std::int64_t q, unsigned n) {
  std::int64_t sum = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::int64_t t = 1;
    for (unsigned k = 0; k < n / d; ++k) t *= q;
    sum += mobius(d) * t;
  }
  return sum / n;
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

MonicPoly lin(const Fq& f, std::uint32_t root) { return MonicPoly::from_lower({f.neg(root)}); }

}  // namespace

TEST_CASE("basic arithmetic examples") {
  const Fq f5(make_field(5, 1));
  const MonicPoly t2m1 = MonicPoly::from_lower({4, 0});
  const MonicPoly tm1 = MonicPoly::from_lower({4});
  CHECK(poly_gcd(f5, t2m1.dense(), tm1.dense()) == tm1);
  CHECK(poly_eval(f5, MonicPoly::from_lower({1, 0}).dense(), 2) == 0);
  const Fq f7(make_field(7, 1));
  FqPoly t7(8, 0);
  t7[7] = 1;
  CHECK(derivative(f7, t7).empty());
}

TEST_CASE("squarefree_decompose examples") {
  const Fq f5(make_field(5, 1));
  const auto f = poly_mul(f5, poly_mul(f5, lin(f5, 1), lin(f5, 1)), lin(f5, 2));
  const auto parts = squarefree_decompose(f5, f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].factor == lin(f5, 2));
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[1].factor == lin(f5, 1));
  CHECK(parts[1].multiplicity == 2);

  for (std::uint32_t a = 0; a < 5; ++a) {
    FqPoly d(6, 0);
    d[5] = 1;
    d[0] = f5.neg(a);
    const auto pp = squarefree_decompose(f5, MonicPoly(d));
    REQUIRE(pp.size() == 1);
    CHECK(pp[0].factor == lin(f5, a));
    CHECK(pp[0].multiplicity == 5);
  }

  const MonicPoly sf = MonicPoly::from_lower({1, 0, 1});
  const auto one = squarefree_decompose(f5, sf);
  REQUIRE(one.size() == 1);
  CHECK(one[0].multiplicity == 1);
}

TEST_CASE("decomposition reassembles f over several fields") {
  for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}}) {
    const Fq f(make_field(p, s));
    std::mt19937 rng(p + 10 * s);
    std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
    for (int t = 0; t < 300; ++t) {
      // Random product of small random factors raised to random powers.
      MonicPoly g;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < k; ++j) {
        const unsigned deg = 1 + rng() % 3;
        std::vector<std::uint32_t> lower(deg);
        for (auto& c : lower) c = d(rng);
        const MonicPoly h = MonicPoly::from_lower(lower);
        const unsigned e = 1 + rng() % (p + 2);
        for (unsigned r = 0; r < e; ++r) g = poly_mul(f, g, h);
      }
      const auto parts = squarefree_decompose(f, g);
      MonicPoly back;
      for (std::size_t a = 0; a < parts.size(); ++a) {
        CHECK(is_squarefree(f, parts[a].factor));
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
          CHECK(poly_gcd(f, parts[a].factor.dense(), parts[b].factor.dense()).degree() == 0);
        }
        for (unsigned r = 0; r < parts[a].multiplicity; ++r) back = poly_mul(f, back, parts[a].factor);
      }
      CHECK(back == g);
    }
  }
}

TEST_CASE("factor_pattern examples") {
  const Fq f3(make_field(3, 1));
  FqPoly t4(5, 0);
  t4[4] = 1;
  CHECK(factor_pattern(f3, MonicPoly(t4)).counts == std::vector<std::uint32_t>{4, 0, 0, 0});
  const MonicPoly q = MonicPoly(find_irreducible(f3, 2));
  CHECK(factor_pattern(f3, q).to_string() == "2^1");

  MonicPoly prod;
  int found = 0;
  for (std::uint32_t c1 = 0; c1 < 3; ++c1) {
    for (std::uint32_t c0 = 0; c0 < 3; ++c0) {
      bool root = false;
      for (std::uint32_t x = 0; x < 3; ++x) root |= (x * x + c1 * x + c0) % 3 == 0;
      if (!root) {
        prod = poly_mul(f3, prod, MonicPoly::from_lower({c0, c1}));
        ++found;
      }
    }
  }
  CHECK(found == 3);
  CHECK(factor_pattern(f3, prod).to_string() == "2^3");
}

TEST_CASE("pattern of a product is the sum of patterns") {
  const Fq f(make_field(3, 2));
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  for (int t = 0; t < 1000; ++t) {
    const unsigned da = 1 + rng() % 4, db = 1 + rng() % 4;
    std::vector<std::uint32_t> la(da), lb(db);
    for (auto& c : la) c = d(rng);
    for (auto& c : lb) c = d(rng);
    const auto a = MonicPoly::from_lower(la), b = MonicPoly::from_lower(lb);
    const auto pa = factor_pattern(f, a), pb = factor_pattern(f, b), pab = factor_pattern(f, poly_mul(f, a, b));
    std::vector<std::uint32_t> sum(da + db, 0);
    for (unsigned i = 0; i < da; ++i) sum[i] += pa.counts[i];
    for (unsigned i = 0; i < db; ++i) sum[i] += pb.counts[i];
    CHECK(pab.counts == sum);
  }
}

TEST_CASE("exhaustive census: totals, necklace count, square-free count") {
  const std::vector<std::tuple<unsigned, unsigned, unsigned>> grid = {
      {2, 1, 6}, {3, 1, 4}, {5, 1, 3}, {5, 1, 4}, {7, 1, 3}, {2, 2, 4}, {3, 2, 3}, {2, 3, 3}};
  for (auto [p, s, n] : grid) {
    const Fq f(make_field(p, s));
    const std::uint64_t total = upow(f.q(), n);
    std::map<std::vector<std::uint32_t>, std::uint64_t> census;
    std::uint64_t sf = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      const auto g = poly_from_code(code, n, f.q());
      const auto c = classify(f, g);
      REQUIRE(c.pattern.valid());
      ++census[c.pattern.counts];
      const bool by_gcd = is_squarefree(f, g);
      CHECK(c.squarefree == by_gcd);
      CHECK(by_gcd == (discriminant(f, g) != 0));
      sf += c.squarefree ? 1 : 0;
    }
    std::uint64_t sum = 0;
    for (const auto& [k, v] : census) sum += v;
    CHECK(sum == total);
    std::vector<std::uint32_t> top(n, 0);
    top[n - 1] = 1;
    CHECK(census[top] == static_cast<std::uint64_t>(necklace(f.q(), n)));
    CHECK(sf == total - upow(f.q(), n - 1));
  }
}

TEST_CASE("square-free count for (5, 3) is 100") {
  const Fq f(make_field(5, 1));
  int count = 0;
  for (std::uint64_t code = 0; code < 125; ++code) count += is_squarefree(f, poly_from_code(code, 3, 5)) ? 1 : 0;
  CHECK(count == 100);
  CHECK_FALSE(is_squarefree(f, MonicPoly::from_lower({0, 0})));
  CHECK(is_squarefree(f, MonicPoly::from_lower({4, 0})));
}

TEST_CASE("resultant against product of root differences") {
  const Fq f(make_field(7, 1));
  // a = (T-1)(T-2), b = (T-3)(T-5): Res = prod (a_i - b_j).
  const auto a = poly_mul(f, lin(f, 1), lin(f, 2));
  const auto b = poly_mul(f, lin(f, 3), lin(f, 5));
  std::int64_t expect = (1 - 3) * (1 - 5) * (2 - 3) * (2 - 5);
  expect = ((expect % 7) + 7) % 7;
  CHECK(resultant(f, a.dense(), b.dense()) == static_cast<std::uint32_t>(expect));
  // disc((T-r1)(T-r2)) = (r1 - r2)^2.
  CHECK(discriminant(f, a) == 1);
}

TEST_CASE("to_string and codes") {
  const auto g = MonicPoly::from_lower({2, 0, 1});
  CHECK(to_string(g) == "T^3 + T^2 + 2");
  CHECK(poly_from_code(poly_code(g, 5), 3, 5) == g);
  CHECK_THROWS_AS(MonicPoly(FqPoly{1, 2}), std::invalid_argument);
}
