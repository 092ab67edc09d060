#include "ffpat/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffpat {

namespace {

Rational qpow(std::uint32_t q, int e) {
  const BigInt magnitude = ipow(BigInt(q), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), magnitude) : Rational(magnitude);
}

void check_values(const Fq& field, const std::vector<std::uint32_t>& v, const char* what) {
  for (const auto x : v) {
    if (x >= field.q()) throw std::invalid_argument(std::string(what) + ": entry " + std::to_string(x) + " is not an element of F_q");
  }
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::linear:
      return "linear";
    case FamilyKind::prescribed:
      return "prescribed";
    case FamilyKind::global:
      return "global";
  }
  return "unknown";
}

void LinearFamily::normalize() {
  const Fq& f = *field_;
  const unsigned w = n_ - r_;
  const std::size_t m = rows_.size();
  s_rows_.assign(m, std::vector<std::uint32_t>(w, 0));
  s_alpha_ = alpha_;
  for (std::size_t j = 0; j < m; ++j) {
    for (unsigned k = 1; k <= w; ++k) s_rows_[j][k - 1] = k % 2 == 1 ? f.neg(rows_[j][k - 1]) : rows_[j][k - 1];
  }

  std::vector<unsigned> pivot_cols;
  std::size_t next = 0;
  for (unsigned col = w; col-- > 0 && next < m;) {
    std::size_t pr = next;
    while (pr < m && s_rows_[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(s_rows_[pr], s_rows_[next]);
    std::swap(s_alpha_[pr], s_alpha_[next]);
    const std::uint32_t inv = f.inv(s_rows_[next][col]);
    for (auto& x : s_rows_[next]) x = f.mul(x, inv);
    s_alpha_[next] = f.mul(s_alpha_[next], inv);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == next || s_rows_[j][col] == 0) continue;
      const std::uint32_t c = s_rows_[j][col];
      for (unsigned k = 0; k < w; ++k) s_rows_[j][k] = f.sub(s_rows_[j][k], f.mul(c, s_rows_[next][k]));
      s_alpha_[j] = f.sub(s_alpha_[j], f.mul(c, s_alpha_[next]));
    }
    pivot_cols.push_back(col);
    ++next;
  }
  if (next < m) throw std::invalid_argument("new_family: constraint rows are linearly dependent");

  std::reverse(s_rows_.begin(), s_rows_.end());
  std::reverse(s_alpha_.begin(), s_alpha_.end());
  std::reverse(pivot_cols.begin(), pivot_cols.end());
  pivots_.clear();
  delta_ = 1;
  d_sum_ = 0;
  for (const unsigned col : pivot_cols) {
    pivots_.push_back(col + 1);
    delta_ *= col + 1;
    d_sum_ += col;
  }

  std::vector<bool> constrained(n_, false);
  solve_terms_.assign(m, {});
  solve_const_.assign(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const unsigned ij = pivots_[j];
    constrained[n_ - ij] = true;
    const bool odd = ij % 2 == 1;
    // c_{n-i_j} = (-1)^{i_j} (-s_alpha - sum_{k != i_j} s_k (-1)^k c_{n-k}).
    solve_const_[j] = odd ? s_alpha_[j] : f.neg(s_alpha_[j]);
    for (unsigned k = 1; k <= w; ++k) {
      if (k == ij || s_rows_[j][k - 1] == 0) continue;
      const bool negate = (ij + k + 1) % 2 == 1;
      const std::uint32_t c = s_rows_[j][k - 1];
      solve_terms_[j].emplace_back(n_ - k, negate ? f.neg(c) : c);
    }
  }
  free_.clear();
  for (unsigned t = 0; t < n_; ++t) {
    if (!constrained[t]) free_.push_back(t);
  }
}

std::optional<BigInt> LinearFamily::delta_ceiling() const {
  if (n_ < m() + 3) return std::nullopt;
  return factorial(n_ - 3) / factorial(n_ - m() - 3);
}

BigInt LinearFamily::d_sum_ceiling() const { return BigInt(m()) * (n_ >= 2 ? n_ - 2 : 0); }

BigInt LinearFamily::size() const { return ipow(BigInt(field_->q()), n_ - m()); }

std::vector<std::uint32_t> LinearFamily::residuals(const std::vector<std::uint32_t>& lower) const {
  const Fq& f = *field_;
  std::vector<std::uint32_t> out(rows_.size(), 0);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    std::uint32_t acc = alpha_[j];
    for (unsigned k = 1; k <= n_ - r_; ++k) acc = f.add(acc, f.mul(rows_[j][k - 1], lower[n_ - k]));
    out[j] = acc;
  }
  return out;
}

bool LinearFamily::contains(const std::vector<std::uint32_t>& lower) const {
  if (lower.size() != n_) return false;
  const auto res = residuals(lower);
  return std::all_of(res.begin(), res.end(), [](std::uint32_t x) { return x == 0; });
}

void LinearFamily::solve_constrained(std::vector<std::uint32_t>& lower) const {
  const Fq& f = *field_;
  for (std::size_t j = 0; j < pivots_.size(); ++j) {
    std::uint32_t acc = solve_const_[j];
    for (const auto& [pos, mult] : solve_terms_[j]) acc = f.add(acc, f.mul(mult, lower[pos]));
    lower[n_ - pivots_[j]] = acc;
  }
}

void LinearFamily::member(std::uint64_t idx, std::vector<std::uint32_t>& lower) const {
  const std::uint32_t q = field_->q();
  lower.assign(n_, 0);
  for (const unsigned t : free_) {
    lower[t] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  if (idx != 0) throw std::out_of_range("LinearFamily::member: index beyond the family size");
  solve_constrained(lower);
}

LinearFamily new_family(FqPtr field, unsigned n, unsigned r, std::vector<std::vector<std::uint32_t>> rows,
                        std::vector<std::uint32_t> alpha) {
  if (!field) throw std::invalid_argument("new_family: missing field");
  if (n < 2) throw std::invalid_argument("new_family: degree must be at least 2");
  if (r < 1 || r > n - 1) throw std::invalid_argument("new_family: r must lie in [1, n-1]");
  if (rows.empty()) throw std::invalid_argument("new_family: at least one constraint row is required");
  if (rows.size() > n - r) throw std::invalid_argument("new_family: more rows than constrained coefficients");
  if (alpha.size() != rows.size()) throw std::invalid_argument("new_family: alpha must have one entry per row");
  for (const auto& row : rows) {
    if (row.size() != n - r) throw std::invalid_argument("new_family: each row needs n-r entries over a_{n-1}..a_r");
    check_values(*field, row, "new_family");
  }
  check_values(*field, alpha, "new_family");
  LinearFamily fam;
  fam.kind_ = FamilyKind::linear;
  fam.field_ = std::move(field);
  fam.n_ = n;
  fam.r_ = r;
  fam.rows_ = std::move(rows);
  fam.alpha_ = std::move(alpha);
  fam.normalize();
  return fam;
}

LinearFamily prescribed_family(FqPtr field, unsigned n, std::vector<unsigned> indices, std::vector<std::uint32_t> alpha) {
  if (!field) throw std::invalid_argument("prescribed_family: missing field");
  if (indices.empty()) throw std::invalid_argument("prescribed_family: at least one index is required");
  if (alpha.size() != indices.size()) throw std::invalid_argument("prescribed_family: alpha must have one entry per index");
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 1 || indices[j] > n) throw std::invalid_argument("prescribed_family: indices must lie in [1, n]");
    if (j > 0 && indices[j] <= indices[j - 1]) {
      throw std::invalid_argument("prescribed_family: indices must be strictly increasing");
    }
  }
  check_values(*field, alpha, "prescribed_family");
  const unsigned width = indices.back();
  LinearFamily fam;
  fam.kind_ = FamilyKind::prescribed;
  fam.n_ = n;
  fam.r_ = n - width;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    std::vector<std::uint32_t> row(width, 0);
    row[indices[j] - 1] = 1;
    fam.rows_.push_back(std::move(row));
    fam.alpha_.push_back(field->neg(alpha[j]));
  }
  fam.field_ = std::move(field);
  fam.normalize();
  return fam;
}

LinearFamily global_family(FqPtr field, unsigned n) {
  if (!field) throw std::invalid_argument("global_family: missing field");
  if (n < 1) throw std::invalid_argument("global_family: degree must be at least 1");
  LinearFamily fam;
  fam.kind_ = FamilyKind::global;
  fam.field_ = std::move(field);
  fam.n_ = n;
  fam.r_ = n;
  fam.normalize();
  return fam;
}

std::uint64_t checked_size(const LinearFamily& fam, std::uint64_t budget) {
  const BigInt size = fam.size();
  check_budget(size, budget, "family enumeration");
  return static_cast<std::uint64_t>(size);
}

Rational expected_count(const LinearFamily& fam, const Pattern& lambda) {
  return Rational(fam.size()) / Rational(pattern_weight(lambda));
}

namespace {

std::vector<std::string> common_failures(const LinearFamily& fam) {
  std::vector<std::string> out;
  if (fam.m() < 1) out.emplace_back("m>=1 required");
  if (fam.field().q() <= fam.n()) out.emplace_back("q>n required");
  return out;
}

}  // namespace

BoundReport bound_fp1(const LinearFamily& fam, const Pattern& lambda) {
  const bool presc = fam.kind() == FamilyKind::prescribed;
  BoundReport b;
  b.tag = presc ? "Thm1.2-I" : "FP-I";
  std::vector<std::string> fail;
  if (fam.field().p() <= 2) fail.emplace_back("p>2 required");
  for (auto& s : common_failures(fam)) fail.push_back(std::move(s));
  const unsigned n = fam.n(), m = fam.m(), r = fam.r();
  if (presc) {
    if (m >= 1 && fam.pivots().back() + 3 > n) fail.emplace_back("i_m<=n-3 required");
  } else if (m >= 1) {
    if (r < 3) fail.emplace_back("r>=3 required");
    if (r + m > n) fail.emplace_back("r<=n-m required");
  }
  b.applicable = fail.empty();
  b.reason = b.applicable ? (presc ? "p>2, q>n and i_m<=n-3 hold" : "p>2, q>n and 3<=r<=n-m hold") : join(fail);

  const Rational t = Rational(BigInt(1), pattern_weight(lambda));
  const Rational scale = qpow(fam.field().q(), static_cast<int>(n) - static_cast<int>(m) - 1);
  const Rational dd(fam.d_sum() * fam.delta());
  b.value.sqrt_coeff = scale * 2 * t * dd;
  b.value.rational_part = scale * (19 * t * dd * dd + Rational(BigInt(n) * (n - 1)));
  return b;
}

BoundReport bound_fp2(const LinearFamily& fam, const Pattern& lambda) {
  const bool presc = fam.kind() == FamilyKind::prescribed;
  BoundReport b;
  b.tag = presc ? "Thm1.2-II" : "FP-II";
  std::vector<std::string> fail = common_failures(fam);
  const unsigned n = fam.n(), m = fam.m(), r = fam.r();
  if (presc) {
    if (m >= 1 && fam.pivots().back() + m + 2 > n) fail.emplace_back("i_m<=n-m-2 required");
  } else if (m >= 1) {
    if (r < m + 2) fail.emplace_back("m+2<=r required");
    if (r + m > n) fail.emplace_back("r<=n-m required");
  }
  b.applicable = fail.empty();
  b.reason = b.applicable ? (presc ? "q>n and i_m<=n-m-2 hold" : "q>n and m+2<=r<=n-m hold") : join(fail);

  const Rational t = Rational(BigInt(1), pattern_weight(lambda));
  const Rational scale = qpow(fam.field().q(), static_cast<int>(n) - static_cast<int>(m) - 1);
  const Rational d(fam.d_sum());
  const Rational delta(fam.delta());
  b.value.sqrt_coeff = 0;
  b.value.rational_part = scale * (21 * t * d * d * d * delta * delta + Rational(BigInt(n) * (n - 1)));
  return b;
}

BoundReport bound_nonsquarefree(const LinearFamily& fam) {
  BoundReport b;
  b.tag = "discr";
  b.applicable = fam.field().q() > fam.n();
  b.reason = b.applicable ? "q>n holds" : "q>n required";
  const unsigned n = fam.n();
  b.value.sqrt_coeff = 0;
  b.value.rational_part =
      qpow(fam.field().q(), static_cast<int>(n) - static_cast<int>(fam.m()) - 1) * Rational(BigInt(n) * (n - 1));
  return b;
}

SqrtBound ReferenceBound::at(std::uint32_t q) const {
  const Rational scale = qpow(q, exponent - 1);
  return SqrtBound{scale * Rational(sqrt_term), scale * Rational(plain_term)};
}

ReferenceBound bound_reference_ci(unsigned n, unsigned l, const std::vector<unsigned>& multidegree) {
  if (multidegree.empty()) throw std::invalid_argument("bound_reference_ci: multidegree must be nonempty");
  ReferenceBound b;
  b.delta = 1;
  b.d_sum = 0;
  for (const unsigned d : multidegree) {
    if (d < 1) throw std::invalid_argument("bound_reference_ci: degrees must be positive");
    b.delta *= d;
    b.d_sum += d - 1;
  }
  b.sqrt_term = b.delta * (b.d_sum - 2) + 2;
  b.plain_term = 14 * b.d_sum * b.d_sum * b.delta * b.delta;
  b.exponent = static_cast<int>(n) - static_cast<int>(l);
  return b;
}

bool bound_holds(const BoundReport& bound, const BigInt& count, const Rational& expected, std::uint32_t q) {
  return within_sqrt_bound(abs(Rational(count) - expected), bound.value, q);
}

}  // namespace ffpat
