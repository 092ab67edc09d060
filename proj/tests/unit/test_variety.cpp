#include <doctest.h>

#include "ffpat/variety.hpp"

#include <random>

using namespace ffpat;

namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Coincidence among same-degree windows only, including inside one window.
bool same_degree_coincidence(const PatternLayout& lay, const std::vector<ExtElem>& y) {
  for (const auto& a : lay.windows) {
    for (const auto& b : lay.windows) {
      if (a.degree != b.degree) continue;
      for (unsigned k1 = 0; k1 < a.degree; ++k1) {
        for (unsigned k2 = 0; k2 < b.degree; ++k2) {
          const unsigned i1 = a.ell + k1, i2 = b.ell + k2;
          if (i1 < i2 && y[i1] == y[i2]) return true;
        }
      }
    }
  }
  return false;
}

// The pair set j1 < j2, k1 < k2 exactly as written.
bool literal_coincidence(const PatternLayout& lay, const std::vector<ExtElem>& y) {
  for (const auto& a : lay.windows) {
    for (const auto& b : lay.windows) {
      if (a.degree != b.degree || a.j >= b.j) continue;
      for (unsigned k1 = 0; k1 < a.degree; ++k1) {
        for (unsigned k2 = k1 + 1; k2 < a.degree; ++k2) {
          if (y[a.ell + k1] == y[b.ell + k2]) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("elementary symmetric values") {
  const Fq f7(make_field(7, 1));
  const std::vector<std::uint32_t> y{1, 2, 3};
  CHECK(elementary_symmetric(f7, 0, std::span<const std::uint32_t>(y)) == 1);
  CHECK(elementary_symmetric(f7, 1, std::span<const std::uint32_t>(y)) == 6);
  CHECK(elementary_symmetric(f7, 2, std::span<const std::uint32_t>(y)) == 4);
  CHECK(elementary_symmetric(f7, 3, std::span<const std::uint32_t>(y)) == 6);
  CHECK_THROWS(elementary_symmetric(f7, 4, std::span<const std::uint32_t>(y)));
}

TEST_CASE("Vieta: coefficients of G are signed symmetric values of Y") {
  const auto f = make_fq(5, 1);
  const unsigned n = 4;
  const Tower tower(f, n);
  const auto fam = prescribed_family(f, n, {1}, {0});
  for (const auto& lam : enumerate_patterns(n)) {
    const SymSystem sys(fam, tower, lam);
    std::vector<ExtElem> y(n);
    for (std::uint64_t idx = 0; idx < 625; ++idx) {
      std::vector<std::uint32_t> x(n);
      vector_at(idx, 5, x);
      sys.compute_y(x, y);
      const auto pi = sys.symmetric_values(y, n);
      const auto g = build_G(tower, sys.layout(), x);
      for (unsigned k = 1; k <= n; ++k) {
        const std::uint32_t signed_pi = k % 2 == 1 ? f->neg(pi[k]) : pi[k];
        CHECK(g.coeff(n - k) == signed_pi);
      }
    }
  }
}

TEST_CASE("R vanishes exactly on the family") {
  const auto f5 = make_fq(5, 1);
  const Tower tower(f5, 4);
  const std::vector<LinearFamily> fams = {
      prescribed_family(f5, 4, {1}, {0}),
      new_family(f5, 4, 2, {{3, 1}}, {4}),
      new_family(f5, 4, 1, {{0, 1, 2}}, {2}),
  };
  for (const auto& fam : fams) {
    for (const auto& lam : enumerate_patterns(4)) {
      const auto res = verify_membership(fam, tower, lam);
      CHECK(res.ok);
      CHECK(res.type_lambda_points > 0);
    }
  }
  // Degree-one case: R_1 = -Pi_1 + alpha' for a_3 = c.
  const auto fam = new_family(f5, 4, 3, {{1}}, {2});
  const SymSystem sys(fam, tower, Pattern::parse("1^4", 4));
  const std::vector<std::uint32_t> x{1, 2, 3, 0};
  CHECK(sys.eval_R(x) == std::vector<std::uint32_t>{f5->add(2, f5->neg(6 % 5))});
}

TEST_CASE("counting identity a_sq * w = v_neq") {
  const auto f5 = make_fq(5, 1);
  const Tower tower(f5, 4);
  const std::vector<LinearFamily> fams = {
      new_family(f5, 4, 3, {{1}}, {0}),
      new_family(f5, 4, 2, {{0, 1}}, {4}),
      new_family(f5, 4, 1, {{1, 0, 2}}, {2}),
  };
  for (const auto& fam : fams) {
    const auto tally = tally_family(fam);
    std::uint64_t total = 0;
    bool literal_breaks = false;
    for (const auto& lam : enumerate_patterns(4)) {
      const SymSystem sys(fam, tower, lam);
      const auto pc = count_points(sys, tally, kDefaultScanBudget, 3);
      CHECK(pc == count_points_serial(sys, tally));
      CHECK(pc.v_eq + pc.v_neq == pc.v_total);
      CHECK(pc.identity_holds(pattern_weight(lam)));
      total += pc.a_sq + pc.a_nsq;

      std::uint64_t same_degree = 0, literal = 0;
      std::vector<ExtElem> y(4), e;
      for (std::uint64_t idx = 0; idx < 625; ++idx) {
        std::vector<std::uint32_t> x(4);
        vector_at(idx, 5, x);
        if (!sys.on_variety(x, y, e)) continue;
        same_degree += same_degree_coincidence(sys.layout(), y) ? 1 : 0;
        literal += literal_coincidence(sys.layout(), y) ? 1 : 0;
      }
      CHECK(same_degree == pc.v_eq);
      if (BigInt(pc.a_sq) * pattern_weight(lam) != BigInt(pc.v_total - literal)) literal_breaks = true;
    }
    CHECK(total == 125);
    CHECK(literal_breaks);
  }
}

TEST_CASE("Jacobian columns match finite differences") {
  const auto f7 = make_fq(7, 1);
  const unsigned n = 6;
  const Tower tower(f7, n);
  std::mt19937 rng(5);
  for (unsigned k = 1; k <= 3; ++k) {
    const auto fam = prescribed_family(f7, n, {k}, {0});
    const SymSystem sys(fam, tower, Pattern::parse("1^2 2^2", n));
    const auto& big = sys.common();
    for (int t = 0; t < 100; ++t) {
      std::vector<ExtElem> y(n);
      for (auto& v : y) v = big.element_at(rng() % big.order());
      const auto jac = sys.jacobian(y);
      for (unsigned col = 0; col < n; ++col) {
        // Pi_k is linear in y_col, so Pi_k(y + s e_col) - Pi_k(y) = s * dPi_k/dY_col for s = 1, 2.
        const ExtElem base = elementary_symmetric(big, k, std::span<const ExtElem>(y));
        for (std::uint32_t s : {1U, 2U}) {
          auto z = y;
          z[col] = big.add(z[col], big.from_base(s));
          const ExtElem diff = big.sub(elementary_symmetric(big, k, std::span<const ExtElem>(z)), base);
          CHECK(diff == big.scale(s, jac[0][col]));
        }
      }
    }
  }
}

TEST_CASE("Jacobian probe finds no counterexample at (7, 5, 1)") {
  const auto f7 = make_fq(7, 1);
  const Tower tower(f7, 5);
  const auto fam = new_family(f7, 5, 3, {{0, 1}}, {0});
  REQUIRE(fam.pivots() == std::vector<unsigned>{2});
  std::uint64_t deficient = 0;
  for (const auto& lam : enumerate_patterns(5)) {
    const SymSystem sys(fam, tower, lam);
    const auto rep = jacobian_probe(sys, kDefaultScanBudget, 2);
    CHECK(rep.in_scope);
    CHECK(rep.passed());
    CHECK(rep.points == rep.full_rank + rep.deficient);
    deficient += rep.deficient;
    if (rep.deficient > 0) CHECK(rep.max_distinct_deficient <= 5 - 4);
    CHECK(rep == jacobian_probe_serial(sys));
  }
  CHECK(deficient > 0);
}

TEST_CASE("probe is labelled informational for p = 2") {
  const auto f8 = make_fq(2, 3);
  const Tower tower(f8, 5);
  const auto fam = new_family(f8, 5, 3, {{0, 1}}, {1});
  const SymSystem sys(fam, tower, Pattern::parse("1^1 2^2", 5));
  const auto rep = jacobian_probe(sys);
  CHECK_FALSE(rep.in_scope);
  CHECK(rep.scope_note == "p=2: outside the rank criterion hypotheses, informational");
}

TEST_CASE("tally agrees with direct classification, any worker count") {
  const auto f = make_fq(3, 2);
  const auto fam = new_family(f, 4, 2, {{1, 2}}, {5});
  const auto t1 = tally_family(fam, kDefaultMemberBudget, 1);
  const auto t4 = tally_family(fam, kDefaultMemberBudget, 4);
  const auto ts = tally_family_serial(fam);
  CHECK(t1 == t4);
  CHECK(t1 == ts);
  FamilyTally direct;
  std::map<std::vector<std::uint32_t>, PatternTally> by;
  for (std::uint64_t code = 0; code < upow(9, 4); ++code) {
    const auto g = poly_from_code(code, 4, 9);
    std::vector<std::uint32_t> lower(g.dense().begin(), g.dense().end() - 1);
    if (!fam.contains(lower)) continue;
    const auto c = classify(*f, g);
    auto& row = by[c.pattern.counts];
    ++row.count;
    ++(c.squarefree ? row.sq : row.nsq);
  }
  for (std::size_t k = 0; k < t1.patterns.size(); ++k) CHECK(t1.rows[k] == by[t1.patterns[k].counts]);
  CHECK_THROWS_AS(tally_family(fam, 10), BudgetExceeded);
}
