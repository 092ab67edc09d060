#include "ffpat/variety.hpp"

#include "ffpat/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ffpat {

namespace {

std::vector<ExtElem> sorted_copy(std::span<const ExtElem> y) {
  std::vector<ExtElem> s(y.begin(), y.end());
  std::sort(s.begin(), s.end());
  return s;
}

constexpr std::size_t kMaxExamples = 5;
constexpr std::uint64_t kBlocks = 256;

}  // namespace

bool has_coincidence(std::span<const ExtElem> y) {
  const auto s = sorted_copy(y);
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

bool has_two_disjoint_pairs(std::span<const ExtElem> y) {
  const auto s = sorted_copy(y);
  unsigned pairs = 0;
  for (std::size_t a = 0; a < s.size();) {
    std::size_t b = a;
    while (b < s.size() && s[b] == s[a]) ++b;
    pairs += static_cast<unsigned>((b - a) / 2);
    a = b;
  }
  return pairs >= 2;
}

unsigned distinct_count(std::span<const ExtElem> y) {
  auto s = sorted_copy(y);
  return static_cast<unsigned>(std::unique(s.begin(), s.end()) - s.begin());
}

SymSystem::SymSystem(LinearFamily fam, const Tower& tower, const Pattern& lambda)
    : fam_(std::move(fam)), layout_(ffpat::layout(lambda)) {
  const unsigned n = fam_.n();
  if (lambda.n() != n) throw std::invalid_argument("SymSystem: pattern degree differs from n");
  if (tower.max_degree() < n) throw std::invalid_argument("SymSystem: tower does not reach degree n");
  if (tower.base().params() != fam_.field().params()) throw std::invalid_argument("SymSystem: field mismatch");

  unsigned big = 1;
  for (const unsigned i : layout_.active_degrees()) big = std::lcm(big, i);
  if (big > kMaxExtDegree) throw std::invalid_argument("SymSystem: common field degree exceeds the supported maximum");
  if (big <= tower.max_degree()) {
    common_ = tower.layer(big).field;
  } else {
    common_ = std::make_shared<const ExtField>(tower.base_ptr(), find_irreducible(tower.base(), big));
  }

  emb_a_.assign(n + 1, {});
  for (const unsigned i : layout_.active_degrees()) {
    const ExtCtx& ctx = tower.layer(i);
    const Embedding e(*ctx.field, common_);
    ExtMatrix m(i, std::vector<ExtElem>(i));
    for (unsigned k = 0; k < i; ++k) {
      for (unsigned h = 0; h < i; ++h) m[k][h] = e(ctx.a[k][h]);
    }
    emb_a_[i] = std::move(m);
  }

  const Fq& f = fam_.field();
  const unsigned width = n - fam_.r();
  for (const auto& row : fam_.input_rows()) {
    std::vector<std::uint32_t> z(width);
    for (unsigned k = 1; k <= width; ++k) z[k - 1] = k % 2 == 1 ? f.neg(row[k - 1]) : row[k - 1];
    z_rows_.push_back(std::move(z));
  }
}

void SymSystem::compute_y(std::span<const std::uint32_t> x, std::span<ExtElem> y) const {
  const ExtField& k = *common_;
  for (const auto& w : layout_.windows) {
    const ExtMatrix& a = emb_a_[w.degree];
    for (unsigned r = 0; r < w.degree; ++r) {
      ExtElem acc = k.zero();
      for (unsigned h = 0; h < w.degree; ++h) k.axpy(x[w.ell + h], a[r][h], acc);
      y[w.ell + r] = acc;
    }
  }
}

std::vector<std::uint32_t> SymSystem::symmetric_values(std::span<const ExtElem> y, unsigned kmax) const {
  std::vector<ExtElem> e;
  elementary_symmetric_all(*common_, y, kmax, e);
  std::vector<std::uint32_t> out(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) out[k] = common_->to_base(e[k]);
  return out;
}

std::vector<std::uint32_t> SymSystem::eval_R(std::span<const std::uint32_t> x) const {
  const unsigned n = fam_.n();
  if (x.size() != n) throw std::invalid_argument("eval_R: vector length differs from n");
  std::vector<ExtElem> y(n);
  compute_y(x, y);
  const unsigned width = n - fam_.r();
  const auto pi = symmetric_values(y, width);
  const Fq& f = fam_.field();
  std::vector<std::uint32_t> out(z_rows_.size());
  for (std::size_t j = 0; j < z_rows_.size(); ++j) {
    std::uint32_t acc = fam_.input_alpha()[j];
    for (unsigned k = 1; k <= width; ++k) acc = f.add(acc, f.mul(z_rows_[j][k - 1], pi[k]));
    out[j] = acc;
  }
  return out;
}

bool SymSystem::on_variety(std::span<const std::uint32_t> x, std::vector<ExtElem>& y, std::vector<ExtElem>& e) const {
  const unsigned width = fam_.n() - fam_.r();
  y.resize(fam_.n());
  compute_y(x, y);
  elementary_symmetric_all(*common_, std::span<const ExtElem>(y), width, e);
  const Fq& f = fam_.field();
  std::vector<std::uint32_t> pi(width + 1);
  for (unsigned k = 1; k <= width; ++k) pi[k] = common_->to_base(e[k]);
  for (std::size_t j = 0; j < z_rows_.size(); ++j) {
    std::uint32_t acc = fam_.input_alpha()[j];
    for (unsigned k = 1; k <= width; ++k) acc = f.add(acc, f.mul(z_rows_[j][k - 1], pi[k]));
    if (acc != 0) return false;
  }
  return true;
}

ExtMatrix SymSystem::jacobian(std::span<const ExtElem> y) const {
  const ExtField& k = *common_;
  const unsigned n = fam_.n();
  const unsigned width = n - fam_.r();
  std::vector<ExtElem> e;
  elementary_symmetric_all(k, y, width, e);
  const auto& s = fam_.s_rows();
  ExtMatrix jac(s.size(), std::vector<ExtElem>(n, k.zero()));
  std::vector<ExtElem> d(width + 1);
  for (unsigned col = 0; col < n; ++col) {
    // d[t] = Pi_t(y without y_col), so dPi_k/dY_col = d[k-1].
    d[0] = k.one();
    for (unsigned t = 1; t < width; ++t) d[t] = k.sub(e[t], k.mul(y[col], d[t - 1]));
    for (std::size_t j = 0; j < s.size(); ++j) {
      ExtElem acc = k.zero();
      for (unsigned kk = 1; kk <= width; ++kk) {
        if (s[j][kk - 1] != 0) k.axpy(s[j][kk - 1], d[kk - 1], acc);
      }
      jac[j][col] = acc;
    }
  }
  return jac;
}

namespace {

std::uint64_t scan_size(const SymSystem& sys, std::uint64_t budget, const char* what) {
  const BigInt total = ipow(BigInt(sys.base().q()), sys.family().n());
  check_budget(total, budget, what);
  return static_cast<std::uint64_t>(total);
}

void count_range(const SymSystem& sys, std::uint64_t begin, std::uint64_t end, PointCounts& out) {
  const unsigned n = sys.family().n();
  const std::uint32_t q = sys.base().q();
  std::vector<std::uint32_t> x(n);
  std::vector<ExtElem> y(n), e;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    vector_at(idx, q, x);
    if (!sys.on_variety(x, y, e)) continue;
    ++out.v_total;
    ++(has_coincidence(y) ? out.v_eq : out.v_neq);
  }
}

PointCounts run_count(const SymSystem& sys, const FamilyTally& tally, std::uint64_t budget, unsigned threads) {
  const std::uint64_t total = scan_size(sys, budget, "count_points");
  const std::uint64_t blocks = std::min(total, kBlocks);
  std::vector<PointCounts> partial(blocks);
  FirstError errors;
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(threads))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    std::uint64_t begin = 0, end = 0;
    block_range(total, blocks, static_cast<std::uint64_t>(b), begin, end);
    errors.guard(static_cast<std::uint64_t>(b), [&] { count_range(sys, begin, end, partial[static_cast<std::size_t>(b)]); });
  }
  errors.rethrow();
  PointCounts out;
  for (const auto& p : partial) {
    out.v_total += p.v_total;
    out.v_eq += p.v_eq;
    out.v_neq += p.v_neq;
  }
  const auto& row = tally.at(sys.layout().lambda);
  out.a_sq = row.sq;
  out.a_nsq = row.nsq;
  return out;
}

void probe_range(const SymSystem& sys, std::uint64_t begin, std::uint64_t end, JacobianReport& out) {
  const unsigned n = sys.family().n();
  const unsigned m = sys.family().m();
  const std::uint32_t q = sys.base().q();
  std::vector<std::uint32_t> x(n);
  std::vector<ExtElem> y(n), e;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    vector_at(idx, q, x);
    if (!sys.on_variety(x, y, e)) continue;
    ++out.points;
    if (rank(sys.common(), sys.jacobian(y)) == m) {
      ++out.full_rank;
      continue;
    }
    ++out.deficient;
    out.max_distinct_deficient = std::max(out.max_distinct_deficient, distinct_count(y));
    if (!has_two_disjoint_pairs(y)) {
      ++out.counterexamples;
      if (out.examples.size() < kMaxExamples) out.examples.push_back(x);
    }
  }
}

JacobianReport run_probe(const SymSystem& sys, std::uint64_t budget, unsigned threads) {
  const std::uint64_t total = scan_size(sys, budget, "jacobian_probe");
  const std::uint64_t blocks = std::min(total, kBlocks);
  std::vector<JacobianReport> partial(blocks);
  FirstError errors;
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(threads))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    std::uint64_t begin = 0, end = 0;
    block_range(total, blocks, static_cast<std::uint64_t>(b), begin, end);
    errors.guard(static_cast<std::uint64_t>(b), [&] { probe_range(sys, begin, end, partial[static_cast<std::size_t>(b)]); });
  }
  errors.rethrow();
  JacobianReport out;
  out.in_scope = sys.base().p() > 2;
  out.scope_note = out.in_scope ? "p>2: asserted" : "p=2: outside the rank criterion hypotheses, informational";
  for (const auto& p : partial) {
    out.points += p.points;
    out.full_rank += p.full_rank;
    out.deficient += p.deficient;
    out.counterexamples += p.counterexamples;
    out.max_distinct_deficient = std::max(out.max_distinct_deficient, p.max_distinct_deficient);
    for (const auto& ex : p.examples) {
      if (out.examples.size() < kMaxExamples) out.examples.push_back(ex);
    }
  }
  return out;
}

}  // namespace

PointCounts count_points(const SymSystem& sys, const FamilyTally& tally, std::uint64_t budget, unsigned workers) {
  return run_count(sys, tally, budget, resolve_workers(workers));
}

PointCounts count_points_serial(const SymSystem& sys, const FamilyTally& tally, std::uint64_t budget) {
  const std::uint64_t total = scan_size(sys, budget, "count_points");
  PointCounts out;
  count_range(sys, 0, total, out);
  const auto& row = tally.at(sys.layout().lambda);
  out.a_sq = row.sq;
  out.a_nsq = row.nsq;
  return out;
}

JacobianReport jacobian_probe(const SymSystem& sys, std::uint64_t budget, unsigned workers) {
  return run_probe(sys, budget, resolve_workers(workers));
}

JacobianReport jacobian_probe_serial(const SymSystem& sys, std::uint64_t budget) {
  const std::uint64_t total = scan_size(sys, budget, "jacobian_probe");
  JacobianReport out;
  out.in_scope = sys.base().p() > 2;
  out.scope_note = out.in_scope ? "p>2: asserted" : "p=2: outside the rank criterion hypotheses, informational";
  probe_range(sys, 0, total, out);
  return out;
}

}  // namespace ffpat
