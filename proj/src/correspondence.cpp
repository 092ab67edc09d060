#include "ffpat/correspondence.hpp"

#include "ffpat/family.hpp"
#include "ffpat/parallel.hpp"
#include "ffpat/variety.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace ffpat {

unsigned PatternLayout::ell(unsigned i, unsigned j) const {
  for (const auto& w : windows) {
    if (w.degree == i && w.j == j) return w.ell;
  }
  throw std::out_of_range("PatternLayout::ell: no window (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

std::vector<unsigned> PatternLayout::active_degrees() const {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= lambda.n(); ++i) {
    if (lambda[i] > 0) out.push_back(i);
  }
  return out;
}

PatternLayout layout(const Pattern& lambda) {
  if (!lambda.valid()) throw std::invalid_argument("layout: invalid pattern");
  PatternLayout lay;
  lay.lambda = lambda;
  unsigned before = 0;
  for (unsigned i = 1; i <= lambda.n(); ++i) {
    for (unsigned j = 1; j <= lambda[i]; ++j) lay.windows.push_back({i, j, before + (j - 1) * i});
    before += i * lambda[i];
  }
  return lay;
}

bool is_cycle(std::span<const std::uint32_t> w) {
  const std::size_t i = w.size();
  for (std::size_t d = 1; d < i; ++d) {
    if (i % d != 0) continue;
    bool periodic = true;
    for (std::size_t k = 0; k + d < i && periodic; ++k) periodic = w[k] == w[k + d];
    if (periodic) return false;
  }
  return true;
}

bool is_type_lambda(std::span<const std::uint32_t> x, const PatternLayout& lay) {
  if (x.size() != lay.n()) throw std::invalid_argument("is_type_lambda: vector length differs from n");
  for (const auto& w : lay.windows) {
    if (!is_cycle(x.subspan(w.ell, w.degree))) return false;
  }
  return true;
}

void vector_at(std::uint64_t idx, std::uint32_t q, std::span<std::uint32_t> x) {
  for (auto& c : x) {
    c = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
}

void window_y(const ExtCtx& ctx, std::span<const std::uint32_t> xw, std::span<ExtElem> y) {
  const ExtField& k = *ctx.field;
  for (unsigned r = 0; r < ctx.i; ++r) {
    ExtElem acc = k.zero();
    for (unsigned h = 0; h < ctx.i; ++h) k.axpy(xw[h], ctx.a[r][h], acc);
    y[r] = acc;
  }
}

MonicPoly build_G(const Tower& tower, const PatternLayout& lay, std::span<const std::uint32_t> x) {
  if (x.size() != lay.n()) throw std::invalid_argument("build_G: vector length differs from n");
  const Fq& base = tower.base();
  FqPoly g{1};
  std::vector<ExtElem> y(lay.n());
  for (const auto& w : lay.windows) {
    const ExtCtx& ctx = tower.layer(w.degree);
    const ExtField& k = *ctx.field;
    std::span<ExtElem> yw(y.data(), w.degree);
    window_y(ctx, x.subspan(w.ell, w.degree), yw);
    std::vector<ExtElem> prod{k.one()};
    for (const auto& root : yw) {
      prod.push_back(k.zero());
      for (std::size_t t = prod.size() - 1; t > 0; --t) prod[t] = k.sub(prod[t - 1], k.mul(root, prod[t]));
      prod[0] = k.neg(k.mul(root, prod[0]));
    }
    FqPoly factor(prod.size());
    for (std::size_t t = 0; t < prod.size(); ++t) factor[t] = k.to_base(prod[t]);
    g = dense::mul(base, g, factor);
  }
  return MonicPoly(std::move(g));
}

std::uint64_t fiber_count(const Tower& tower, const MonicPoly& f, const Pattern& lambda, std::uint64_t budget) {
  const unsigned n = lambda.n();
  if (f.degree() != n) return 0;
  const std::uint32_t q = tower.base().q();
  const BigInt total = ipow(BigInt(q), n);
  check_budget(total, budget, "fiber_count");
  const auto lay = layout(lambda);
  std::vector<std::uint32_t> x(n);
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(total); ++idx) {
    vector_at(idx, q, x);
    if (build_G(tower, lay, x) == f) ++count;
  }
  return count;
}

namespace {

struct PolyClass {
  std::uint32_t pattern = 0;
  bool squarefree = false;
};

CorrespondenceCheck scan_correspondence(const Tower& tower, unsigned n, std::uint64_t budget, unsigned workers) {
  const Fq& base = tower.base();
  const std::uint32_t q = base.q();
  if (tower.max_degree() < n) throw std::invalid_argument("verify_correspondence: tower does not reach degree n");
  const BigInt total_big = ipow(BigInt(q), n);
  check_budget(total_big, budget, "verify_correspondence");
  const auto total = static_cast<std::uint64_t>(total_big);
  const PatternIndex index(n);
  const int threads = static_cast<int>(workers);

  std::vector<PolyClass> cls(total);
  FirstError errors;
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(total); ++c) {
    errors.guard(static_cast<std::uint64_t>(c), [&] {
      const auto k = classify(base, poly_from_code(static_cast<std::uint64_t>(c), n, q));
      cls[static_cast<std::size_t>(c)] = {static_cast<std::uint32_t>(index.index_of(k.pattern)), k.squarefree};
    });
  }
  errors.rethrow();

  CorrespondenceCheck res;
  res.q = q;
  res.n = n;
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t li = 0; li < index.size(); ++li) {
    const Pattern& lambda = index.at(li);
    const auto lay = layout(lambda);
    const auto w = static_cast<std::uint64_t>(pattern_weight(lambda));
    std::vector<std::atomic<std::uint32_t>> fiber(total);
    for (auto& v : fiber) v.store(0, std::memory_order_relaxed);
    std::uint64_t mismatches = 0;
    std::uint64_t first_bad = kNone;
    FirstError scan_errors;
#pragma omp parallel num_threads(threads) reduction(+ : mismatches)
    {
      std::vector<std::uint32_t> x(n);
      std::uint64_t local_first = kNone;
#pragma omp for schedule(static)
      for (std::int64_t s = 0; s < static_cast<std::int64_t>(total); ++s) {
        const auto idx = static_cast<std::uint64_t>(s);
        scan_errors.guard(idx, [&] {
          vector_at(idx, q, x);
          const MonicPoly g = build_G(tower, lay, x);
          const std::uint64_t code = poly_code(g, q);
          fiber[code].fetch_add(1, std::memory_order_relaxed);
          const bool has_pattern = cls[code].pattern == li;
          if (has_pattern != is_type_lambda(x, lay)) {
            ++mismatches;
            local_first = std::min(local_first, idx);
          }
        });
      }
#pragma omp critical
      first_bad = std::min(first_bad, local_first);
    }
    scan_errors.rethrow();
    res.pairs += total;
    res.pattern_mismatches += mismatches;
    if (first_bad != kNone && res.counterexamples.size() < 10) {
      res.counterexamples.push_back("lambda " + lambda.to_string() + ": pattern/type mismatch at x index " +
                                    std::to_string(first_bad));
    }
    auto& hist = res.nonsquarefree_fibers[lambda.to_string()];
    for (std::uint64_t c = 0; c < total; ++c) {
      const std::uint64_t size = fiber[c].load(std::memory_order_relaxed);
      if (cls[c].pattern != li) {
        if (size != 0 && cls[c].squarefree) {
          ++res.stray_fibers;
          if (res.counterexamples.size() < 10) {
            res.counterexamples.push_back("lambda " + lambda.to_string() + ": polynomial code " + std::to_string(c) +
                                          " (square-free, outside P_lambda) has fiber " + std::to_string(size));
          }
        }
        continue;
      }
      if (cls[c].squarefree) {
        ++res.squarefree_checked;
        if (size != w) {
          ++res.fiber_mismatches;
          if (res.counterexamples.size() < 10) {
            res.counterexamples.push_back("lambda " + lambda.to_string() + ": square-free code " + std::to_string(c) +
                                          " has fiber " + std::to_string(size) + ", expected " + std::to_string(w));
          }
        }
      } else {
        ++hist[size];
      }
    }
  }
  return res;
}

}  // namespace

CorrespondenceCheck verify_correspondence(const Tower& tower, unsigned n, std::uint64_t budget, unsigned workers) {
  return scan_correspondence(tower, n, budget, resolve_workers(workers));
}

CorrespondenceCheck verify_correspondence_serial(const Tower& tower, unsigned n, std::uint64_t budget) {
  return scan_correspondence(tower, n, budget, 1);
}

MembershipCheck verify_membership(const LinearFamily& fam, const Tower& tower, const Pattern& lambda,
                                      std::uint64_t budget) {
  if (lambda.n() != fam.n()) throw std::invalid_argument("verify_membership: pattern degree differs from n");
  const unsigned n = fam.n();
  const std::uint32_t q = tower.base().q();
  const BigInt total = ipow(BigInt(q), n);
  check_budget(total, budget, "verify_membership");
  const SymSystem sys(fam, tower, lambda);
  const auto& lay = sys.layout();
  MembershipCheck res;
  std::vector<std::uint32_t> x(n);
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(total); ++idx) {
    vector_at(idx, q, x);
    if (!is_type_lambda(x, lay)) continue;
    ++res.type_lambda_points;
    const MonicPoly g = build_G(tower, lay, x);
    const std::vector<std::uint32_t> lower(g.dense().begin(), g.dense().end() - 1);
    const bool member = fam.contains(lower);
    const auto r = sys.eval_R(x);
    const bool zero = std::all_of(r.begin(), r.end(), [](std::uint32_t v) { return v == 0; });
    res.in_family += member ? 1 : 0;
    if (member != zero) {
      res.ok = false;
      if (!res.counterexample) res.counterexample = x;
    }
  }
  return res;
}

}  // namespace ffpat
