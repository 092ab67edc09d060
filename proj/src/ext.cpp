#include "ffpat/ext.hpp"

#include "ffpat/dense_poly.hpp"

#include <algorithm>
#include <sstream>

namespace ffpat {

bool ExtElem::operator<(const ExtElem& o) const {
  for (unsigned k = std::max(deg, o.deg); k-- > 0;) {
    if (c[k] != o.c[k]) return c[k] < o.c[k];
  }
  return false;
}

ExtField::ExtField(FqPtr base, std::vector<std::uint32_t> modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (!base_) throw std::invalid_argument("ExtField: null base field");
  if (modulus_.size() < 2 || modulus_.back() != 1) throw std::invalid_argument("ExtField: modulus must be monic of degree >= 1");
  d_ = static_cast<unsigned>(modulus_.size() - 1);
  if (d_ > kMaxExtDegree) throw std::invalid_argument("ExtField: degree exceeds " + std::to_string(kMaxExtDegree));

  order_ = 1;
  for (unsigned k = 0; k < d_; ++k) {
    if (order_ > UINT64_MAX / base_->q()) {
      order_ = 0;
      break;
    }
    order_ *= base_->q();
  }

  frob_.assign(d_, std::vector<ExtElem>(d_));
  for (unsigned j = 0; j < d_; ++j) {
    frob_[0][j] = zero();
    frob_[0][j].c[j] = 1;
  }
  if (d_ == 1) return;
  const ExtElem sigma_v = pow(generator(), base_->q());
  ExtElem power = one();
  for (unsigned j = 0; j < d_; ++j) {
    frob_[1][j] = power;
    power = mul(power, sigma_v);
  }
  for (unsigned k = 2; k < d_; ++k) {
    for (unsigned j = 0; j < d_; ++j) {
      ExtElem acc = zero();
      const ExtElem& prev = frob_[k - 1][j];
      for (unsigned t = 0; t < d_; ++t) axpy(prev.c[t], frob_[1][t], acc);
      frob_[k][j] = acc;
    }
  }
}

ExtElem ExtField::zero() const {
  ExtElem z;
  z.deg = static_cast<std::uint8_t>(d_);
  return z;
}

ExtElem ExtField::one() const {
  ExtElem z = zero();
  z.c[0] = 1;
  return z;
}

ExtElem ExtField::generator() const {
  ExtElem z = zero();
  if (d_ == 1) {
    // v = -h_0 in F_q[v]/(v + h_0).
    z.c[0] = base_->neg(modulus_[0]);
  } else {
    z.c[1] = 1;
  }
  return z;
}

bool ExtField::is_zero(const ExtElem& a) const {
  for (unsigned k = 0; k < d_; ++k) {
    if (a.c[k] != 0) return false;
  }
  return true;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r = zero();
  for (unsigned k = 0; k < d_; ++k) r.c[k] = base_->add(a.c[k], b.c[k]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem r = zero();
  for (unsigned k = 0; k < d_; ++k) r.c[k] = base_->sub(a.c[k], b.c[k]);
  return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
  ExtElem r = zero();
  for (unsigned k = 0; k < d_; ++k) r.c[k] = base_->neg(a.c[k]);
  return r;
}

ExtElem ExtField::scale(std::uint32_t a, const ExtElem& x) const {
  ExtElem r = zero();
  if (a == 0) return r;
  for (unsigned k = 0; k < d_; ++k) r.c[k] = base_->mul(a, x.c[k]);
  return r;
}

void ExtField::axpy(std::uint32_t a, const ExtElem& x, ExtElem& acc) const {
  if (a == 0) return;
  for (unsigned k = 0; k < d_; ++k) acc.c[k] = base_->add(acc.c[k], base_->mul(a, x.c[k]));
}

ExtElem ExtField::reduce(const std::array<std::uint64_t, 2 * kMaxExtDegree>& prod_in) const {
  // Prime base field only: coefficients are unreduced integers.
  const std::uint64_t p = base_->p();
  std::array<std::uint64_t, 2 * kMaxExtDegree> prod = prod_in;
  for (unsigned k = 2 * d_ - 1; k-- > d_;) {
    const std::uint64_t c = prod[k] % p;
    if (c == 0) continue;
    for (unsigned t = 0; t < d_; ++t) {
      const std::uint64_t h = modulus_[t];
      if (h != 0) prod[k - d_ + t] += (p - h) * c;
    }
  }
  ExtElem r = zero();
  for (unsigned k = 0; k < d_; ++k) r.c[k] = static_cast<std::uint32_t>(prod[k] % p);
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  if (base_->is_prime_field()) {
    std::array<std::uint64_t, 2 * kMaxExtDegree> prod{};
    for (unsigned i = 0; i < d_; ++i) {
      const std::uint64_t ai = a.c[i];
      if (ai == 0) continue;
      for (unsigned j = 0; j < d_; ++j) prod[i + j] += ai * b.c[j];
    }
    return reduce(prod);
  }
  const Fq& f = *base_;
  std::array<std::uint32_t, 2 * kMaxExtDegree> prod{};
  for (unsigned i = 0; i < d_; ++i) {
    if (a.c[i] == 0) continue;
    for (unsigned j = 0; j < d_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a.c[i], b.c[j]));
  }
  for (unsigned k = 2 * d_ - 1; k-- > d_;) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    for (unsigned t = 0; t < d_; ++t) prod[k - d_ + t] = f.sub(prod[k - d_ + t], f.mul(c, modulus_[t]));
  }
  ExtElem r = zero();
  for (unsigned k = 0; k < d_; ++k) r.c[k] = prod[k];
  return r;
}

ExtElem ExtField::pow(ExtElem a, std::uint64_t e) const {
  ExtElem result = one();
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e > 0) a = mul(a, a);
  }
  return result;
}

ExtElem ExtField::inv(const ExtElem& a) const {
  if (is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
  // Extended Euclid in F_q[v]: track s with s * a = r (mod h).
  const Fq& f = *base_;
  using P = dense::Poly<Fq>;
  P r0 = modulus_;
  P r1(a.c.begin(), a.c.begin() + d_);
  dense::trim(f, r1);
  P s0, s1{f.one()};
  while (dense::degree<Fq>(r1) > 0) {
    auto [quot, rem] = dense::divmod(f, r0, r1);
    P s2 = dense::sub(f, s0, dense::mul(f, quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const std::uint32_t c = f.inv(r1[0]);
  ExtElem r = zero();
  for (std::size_t k = 0; k < s1.size(); ++k) r.c[k] = f.mul(c, s1[k]);
  return r;
}

ExtElem ExtField::from_base(std::uint32_t a) const {
  ExtElem z = zero();
  z.c[0] = a;
  return z;
}

bool ExtField::is_base(const ExtElem& x) const {
  for (unsigned k = 1; k < d_; ++k) {
    if (x.c[k] != 0) return false;
  }
  return true;
}

std::uint32_t ExtField::to_base(const ExtElem& x) const {
  if (!(frobenius(x, 1) == x) || !is_base(x)) {
    throw FrobeniusFault("element " + to_string(x) + " is not fixed by Frobenius");
  }
  return x.c[0];
}

ExtElem ExtField::frobenius(const ExtElem& x, unsigned k) const {
  k %= d_;
  if (k == 0) return x;
  ExtElem acc = zero();
  for (unsigned j = 0; j < d_; ++j) axpy(x.c[j], frob_[k][j], acc);
  return acc;
}

ExtElem ExtField::element_at(std::uint64_t index) const {
  ExtElem z = zero();
  for (unsigned k = 0; k < d_; ++k) {
    z.c[k] = static_cast<std::uint32_t>(index % base_->q());
    index /= base_->q();
  }
  return z;
}

std::uint64_t ExtField::index_of(const ExtElem& x) const {
  std::uint64_t v = 0;
  for (unsigned k = d_; k-- > 0;) v = v * base_->q() + x.c[k];
  return v;
}

void ExtField::check_member(const ExtElem& x) const {
  if (x.deg != d_) {
    throw std::invalid_argument("element of a degree-" + std::to_string(x.deg) + " layer used in degree-" +
                                std::to_string(d_) + " layer");
  }
}

unsigned coordinate_rank(const ExtField& field, const std::vector<ExtElem>& elems) {
  const Fq& f = field.base();
  const unsigned d = field.degree();
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(elems.size());
  for (const auto& e : elems) rows.emplace_back(e.c.begin(), e.c.begin() + d);
  unsigned rank = 0;
  for (unsigned col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint32_t inv = f.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint32_t factor = f.mul(rows[r][col], inv);
      if (factor == 0) continue;
      for (unsigned c = col; c < d; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

bool is_normal(const ExtField& field, const ExtElem& theta) {
  std::vector<ExtElem> conj;
  conj.reserve(field.degree());
  for (unsigned h = 0; h < field.degree(); ++h) conj.push_back(field.frobenius(theta, h));
  return coordinate_rank(field, conj) == field.degree();
}

ExtElem find_normal_element(const ExtField& field) {
  const std::uint64_t limit = field.order() == 0 ? UINT64_MAX : field.order();
  for (std::uint64_t index = 1; index < limit; ++index) {
    const ExtElem x = field.element_at(index);
    if (is_normal(field, x)) return x;
  }
  throw std::logic_error("find_normal_element: no normal element found");
}

ExtMatrix multiply(const ExtField& field, const ExtMatrix& a, const ExtMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  ExtMatrix r(n, std::vector<ExtElem>(cols, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (field.is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] = field.add(r[i][j], field.mul(a[i][k], b[k][j]));
    }
  }
  return r;
}

ExtMatrix invert(const ExtField& field, const ExtMatrix& m) {
  const std::size_t n = m.size();
  ExtMatrix work = m;
  ExtMatrix inv(n, std::vector<ExtElem>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && field.is_zero(work[pivot][col])) ++pivot;
    if (pivot == n) throw std::domain_error("invert: singular matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const ExtElem s = field.inv(work[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] = field.mul(work[col][j], s);
      inv[col][j] = field.mul(inv[col][j], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || field.is_zero(work[r][col])) continue;
      const ExtElem factor = work[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] = field.sub(work[r][j], field.mul(factor, work[col][j]));
        inv[r][j] = field.sub(inv[r][j], field.mul(factor, inv[col][j]));
      }
    }
  }
  return inv;
}

unsigned rank(const ExtField& field, ExtMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  unsigned rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && field.is_zero(m[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rk]);
    const ExtElem s = field.inv(m[rk][col]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      if (field.is_zero(m[r][col])) continue;
      const ExtElem factor = field.mul(m[r][col], s);
      for (std::size_t j = col; j < cols; ++j) m[r][j] = field.sub(m[r][j], field.mul(factor, m[rk][j]));
    }
    ++rk;
  }
  return rk;
}

ExtCtx make_ext_ctx(const FqPtr& base, unsigned i) {
  if (i < 1) throw std::invalid_argument("make_ext_ctx: degree must be >= 1");
  ExtCtx ctx;
  ctx.i = i;
  ctx.field = std::make_shared<const ExtField>(base, find_irreducible(*base, i));
  const ExtField& field = *ctx.field;
  ctx.theta = i == 1 ? field.one() : find_normal_element(field);
  ctx.a.assign(i, std::vector<ExtElem>(i));
  for (unsigned k = 0; k < i; ++k) {
    for (unsigned h = 0; h < i; ++h) ctx.a[k][h] = field.frobenius(ctx.theta, k + h);
  }
  ctx.a_inv = invert(field, ctx.a);
  return ctx;
}

Tower::Tower(FqPtr base, unsigned max_degree) : base_(std::move(base)) {
  if (max_degree < 1) throw std::invalid_argument("Tower: max degree must be >= 1");
  layers_.reserve(max_degree);
  for (unsigned i = 1; i <= max_degree; ++i) layers_.push_back(make_ext_ctx(base_, i));
}

const ExtCtx& Tower::layer(unsigned i) const {
  if (i < 1 || i > layers_.size()) throw std::out_of_range("Tower: no layer of degree " + std::to_string(i));
  return layers_[i - 1];
}

void Tower::replace_layer(ExtCtx ctx) {
  if (ctx.i < 1 || ctx.i > layers_.size()) throw std::out_of_range("Tower: no layer of degree " + std::to_string(ctx.i));
  layers_[ctx.i - 1] = std::move(ctx);
}

namespace {

using KPoly = dense::Poly<ExtField>;

/// Splits `g` by the classes of T -> Tr_{K/F_p}(beta T) modulo g.
std::vector<KPoly> trace_split(const ExtField& field, const KPoly& g, const ExtElem& beta) {
  const std::uint32_t p = field.base().p();
  const unsigned absolute_degree = field.base().s() * field.degree();
  KPoly z{field.zero(), beta};
  dense::rem_inplace(field, z, g);
  KPoly tr = z;
  for (unsigned k = 1; k < absolute_degree; ++k) {
    z = dense::powmod(field, z, p, g);
    tr = dense::add(field, tr, z);
  }
  std::vector<KPoly> parts;
  for (std::uint32_t c = 0; c < p; ++c) {
    KPoly shifted = dense::sub(field, tr, KPoly{field.from_base(c)});
    KPoly u = dense::gcd(field, g, shifted);
    if (dense::degree<ExtField>(u) > 0) parts.push_back(std::move(u));
  }
  return parts;
}

}  // namespace

std::vector<ExtElem> split_roots(const ExtField& field, const std::vector<std::uint32_t>& f) {
  if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("split_roots: expects monic of degree >= 1");
  KPoly lifted;
  lifted.reserve(f.size());
  for (const auto c : f) lifted.push_back(field.from_base(c));

  std::vector<KPoly> work{lifted};
  const Fq& base = field.base();
  for (unsigned j = 0; j < field.degree(); ++j) {
    for (unsigned t = 0; t < base.s(); ++t) {
      bool pending = false;
      for (const auto& g : work) pending = pending || dense::degree<ExtField>(g) > 1;
      if (!pending) break;
      ExtElem beta = field.zero();
      std::uint32_t u_power = 1;
      for (unsigned k = 0; k < t; ++k) u_power *= base.p();
      beta.c[j] = u_power;
      std::vector<KPoly> next;
      for (const auto& g : work) {
        if (dense::degree<ExtField>(g) <= 1) {
          next.push_back(g);
          continue;
        }
        for (auto& part : trace_split(field, g, beta)) next.push_back(std::move(part));
      }
      work = std::move(next);
    }
  }
  std::vector<ExtElem> roots;
  for (const auto& g : work) {
    if (dense::degree<ExtField>(g) != 1) throw std::domain_error("split_roots: polynomial does not split into distinct linear factors");
    roots.push_back(field.neg(g[0]));
  }
  if (roots.size() != f.size() - 1) throw std::domain_error("split_roots: polynomial is not square-free over the layer");
  std::sort(roots.begin(), roots.end());
  return roots;
}

Embedding::Embedding(const ExtField& from, ExtFieldPtr to) : to_(std::move(to)) {
  if (!to_) throw std::invalid_argument("Embedding: null target");
  if (to_->degree() % from.degree() != 0) throw std::invalid_argument("Embedding: degree does not divide target degree");
  if (to_->degree() == from.degree() && to_->modulus() == from.modulus()) {
    root_ = to_->generator();
  } else {
    root_ = split_roots(*to_, from.modulus()).front();
  }
  powers_.resize(from.degree());
  ExtElem power = to_->one();
  for (unsigned k = 0; k < from.degree(); ++k) {
    powers_[k] = power;
    power = to_->mul(power, root_);
  }
}

ExtElem Embedding::operator()(const ExtElem& x) const {
  ExtElem acc = to_->zero();
  for (std::size_t k = 0; k < powers_.size(); ++k) to_->axpy(x.c[k], powers_[k], acc);
  return acc;
}

std::string to_string(const ExtElem& x) {
  std::ostringstream os;
  os << "[";
  for (unsigned k = 0; k < x.deg; ++k) os << (k ? "," : "") << x.c[k];
  os << "]";
  return os.str();
}

}  // namespace ffpat
