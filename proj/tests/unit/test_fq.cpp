#include <doctest.h>

#include "ffpat/ext.hpp"

#include <random>
#include <set>

using namespace ffpat;

namespace {

// Independent root test over a prime field: f has no root in F_p.
bool has_root_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t k = f.size(); k-- > 0;) v = (v * x + f[k]) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make_field validates input") {
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 21), std::invalid_argument);
  const auto f5 = make_field(5, 1);
  CHECK(f5.q == 5);
  CHECK(f5.g.empty());
}

TEST_CASE("F_9 modulus is the smallest rootless monic quadratic") {
  const auto f9 = make_field(3, 2);
  std::vector<std::uint32_t> expected;
  for (std::uint32_t c1 = 0; c1 < 3 && expected.empty(); ++c1) {
    for (std::uint32_t c0 = 0; c0 < 3; ++c0) {
      if (!has_root_mod_p({c0, c1, 1}, 3)) {
        expected = {c0, c1, 1};
        break;
      }
    }
  }
  CHECK(f9.g == expected);
  CHECK(f9.g == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f9.q == 9);
}

TEST_CASE("find_irreducible small cases") {
  const Fq f2(make_field(2, 1));
  CHECK(find_irreducible(f2, 2) == std::vector<std::uint32_t>{1, 1, 1});
  const Fq f7(make_field(7, 1));
  CHECK(find_irreducible(f7, 1) == std::vector<std::uint32_t>{0, 1});
  const Fq f3(make_field(3, 1));
  CHECK_FALSE(has_root_mod_p(find_irreducible(f3, 2), 3));
}

TEST_CASE("field axioms in F_q, sampled") {
  for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 2}, {5, 1}, {7, 2}, {2, 10}, {3, 7}}) {
    const Fq f(make_field(p, s));
    std::mt19937 rng(p * 100 + s);
    std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
    for (int t = 0; t < 500; ++t) {
      const auto a = d(rng), b = d(rng), c = d(rng);
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(f.pth_root(a), p) == a);
      CHECK(f.pow(a, f.q()) == a);
    }
  }
}

TEST_CASE("every element of F_{q^i} satisfies x^{q^i} = x") {
  const auto base = make_fq(5, 1);
  for (unsigned i : {1U, 2U, 3U, 4U}) {
    const auto ctx = make_ext_ctx(base, i);
    const auto& k = *ctx.field;
    for (std::uint64_t idx = 0; idx < k.order(); ++idx) {
      const auto x = k.element_at(idx);
      REQUIRE(k.index_of(x) == idx);
      CHECK(k.frobenius(x, i) == x);
      CHECK(k.pow(x, std::uint64_t{1} << 0) == x);
    }
  }
}

TEST_CASE("Frobenius fixes the base field and is an algebra map") {
  const auto base = make_fq(3, 2);
  const auto ctx = make_ext_ctx(base, 3);
  const auto& k = *ctx.field;
  for (std::uint32_t a = 0; a < base->q(); ++a) CHECK(k.frobenius(k.from_base(a), 1) == k.from_base(a));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> d(0, k.order() - 1);
  for (int t = 0; t < 1000; ++t) {
    const auto x = k.element_at(d(rng)), y = k.element_at(d(rng));
    CHECK(k.frobenius(k.add(x, y)) == k.add(k.frobenius(x), k.frobenius(y)));
    CHECK(k.frobenius(k.mul(x, y)) == k.mul(k.frobenius(x), k.frobenius(y)));
    CHECK(k.frobenius(x) == k.pow(x, base->q()));
    CHECK(k.frobenius(k.frobenius(x, 1), 2) == x);
    if (!k.is_zero(x)) CHECK(k.mul(x, k.inv(x)) == k.one());
  }
}

TEST_CASE("generator of F_125 has an orbit of size 3") {
  const auto base = make_fq(5, 1);
  const auto ctx = make_ext_ctx(base, 3);
  const auto& k = *ctx.field;
  const auto v = k.generator();
  std::set<ExtElem> orbit;
  ExtElem x = v;
  for (int t = 0; t < 3; ++t) {
    orbit.insert(x);
    x = k.pow(x, 5);
  }
  CHECK(orbit.size() == 3);
  CHECK(x == v);
}

TEST_CASE("normal element for (5, 2) and matrix inverses") {
  const auto base = make_fq(5, 1);
  const auto ctx = make_ext_ctx(base, 2);
  const auto& k = *ctx.field;
  // Independent scan: first element whose conjugate pair is F_5-independent.
  ExtElem expected;
  for (std::uint64_t idx = 0; idx < k.order(); ++idx) {
    const auto t = k.element_at(idx);
    const auto tq = k.pow(t, 5);
    const std::uint32_t det = base->sub(base->mul(t.c[0], tq.c[1]), base->mul(t.c[1], tq.c[0]));
    if (det != 0) {
      expected = t;
      break;
    }
  }
  CHECK(ctx.theta == expected);
  for (unsigned i : {1U, 2U, 3U, 4U, 5U}) {
    const auto c = make_ext_ctx(base, i);
    CHECK(is_normal(*c.field, c.theta));
    const auto prod = multiply(*c.field, c.a, c.a_inv);
    for (unsigned r = 0; r < i; ++r) {
      for (unsigned s = 0; s < i; ++s) CHECK(prod[r][s] == (r == s ? c.field->one() : c.field->zero()));
    }
    for (unsigned kk = 0; kk < i; ++kk) {
      for (unsigned h = 0; h < i; ++h) CHECK(c.a[kk][h] == c.field->frobenius(c.theta, kk + h));
    }
  }
  const auto one = make_ext_ctx(base, 1);
  CHECK(one.theta == one.field->one());
}

TEST_CASE("to_base rejects elements outside F_q") {
  const auto base = make_fq(7, 1);
  const auto ctx = make_ext_ctx(base, 2);
  CHECK_THROWS_AS(ctx.field->to_base(ctx.field->generator()), FrobeniusFault);
  CHECK(ctx.field->to_base(ctx.field->from_base(3)) == 3);
}

TEST_CASE("embeddings are field homomorphisms") {
  const auto base = make_fq(3, 1);
  const auto k2 = make_ext_ctx(base, 2);
  const auto k6 = make_ext_ctx(base, 6);
  const Embedding e(*k2.field, k6.field);
  const auto& big = *k6.field;
  const auto& small = *k2.field;
  for (std::uint64_t a = 0; a < small.order(); ++a) {
    for (std::uint64_t b = 0; b < small.order(); ++b) {
      const auto x = small.element_at(a), y = small.element_at(b);
      CHECK(e(small.mul(x, y)) == big.mul(e(x), e(y)));
      CHECK(e(small.add(x, y)) == big.add(e(x), e(y)));
    }
  }
  const Embedding id(*k6.field, k6.field);
  CHECK(id(big.generator()) == big.generator());
}
