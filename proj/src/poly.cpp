#include "ffpat/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ffpat {

MonicPoly::MonicPoly(FqPoly dense) : dense_(std::move(dense)) {
  if (dense_.empty() || dense_.back() != 1) throw std::invalid_argument("MonicPoly: leading coefficient must be 1");
}

MonicPoly MonicPoly::from_lower(const std::vector<std::uint32_t>& lower) {
  FqPoly d(lower);
  d.push_back(1);
  return MonicPoly(std::move(d));
}

bool MonicPoly::operator<(const MonicPoly& o) const {
  if (dense_.size() != o.dense_.size()) return dense_.size() < o.dense_.size();
  return std::lexicographical_compare(dense_.rbegin(), dense_.rend(), o.dense_.rbegin(), o.dense_.rend());
}

MonicPoly poly_mul(const Fq& field, const MonicPoly& a, const MonicPoly& b) {
  return MonicPoly(dense::mul(field, a.dense(), b.dense()));
}

MonicPoly poly_gcd(const Fq& field, const FqPoly& a, const FqPoly& b) {
  FqPoly g = dense::gcd(field, a, b);
  if (g.empty()) throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
  return MonicPoly(std::move(g));
}

FqPoly derivative(const Fq& field, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly d(a.size() - 1, 0);
  for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = field.mul(field.from_int(static_cast<std::int64_t>(k)), a[k]);
  dense::trim(field, d);
  return d;
}

std::uint32_t poly_eval(const Fq& field, const FqPoly& a, std::uint32_t x) { return dense::eval(field, a, x); }

FqPoly pth_root(const Fq& field, const FqPoly& f) {
  const std::uint32_t p = field.p();
  if (f.empty()) return f;
  if ((f.size() - 1) % p != 0) throw std::invalid_argument("pth_root: degree is not a multiple of p");
  FqPoly g((f.size() - 1) / p + 1, 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k % p == 0) {
      g[k / p] = field.pth_root(f[k]);
    } else if (f[k] != 0) {
      throw std::invalid_argument("pth_root: polynomial is not a p-th power");
    }
  }
  return g;
}

namespace {

void squarefree_rec(const Fq& field, const FqPoly& f, unsigned scale, std::vector<SquarefreeFactor>& out) {
  if (dense::degree<Fq>(f) < 1) return;
  const FqPoly df = derivative(field, f);
  if (df.empty()) {
    squarefree_rec(field, pth_root(field, f), scale * field.p(), out);
    return;
  }
  FqPoly c = dense::gcd(field, f, df);
  FqPoly w = dense::quo(field, f, c);
  unsigned i = 1;
  while (dense::degree<Fq>(w) > 0) {
    FqPoly y = dense::gcd(field, w, c);
    FqPoly z = dense::quo(field, w, y);
    if (dense::degree<Fq>(z) > 0) out.push_back({MonicPoly(std::move(z)), i * scale});
    ++i;
    c = dense::quo(field, c, y);
    w = std::move(y);
  }
  if (dense::degree<Fq>(c) > 0) squarefree_rec(field, pth_root(field, c), scale * field.p(), out);
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decompose(const Fq& field, const MonicPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("squarefree_decompose: degree must be >= 1");
  std::vector<SquarefreeFactor> out;
  squarefree_rec(field, f.dense(), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

std::vector<unsigned> distinct_degree_counts(const Fq& field, const MonicPoly& g_in) {
  FqPoly g = g_in.dense();
  std::vector<unsigned> counts(g.size(), 0);
  if (dense::degree<Fq>(g) < 1) return counts;
  const FqPoly t = dense::monomial_t(field);
  FqPoly h = dense::rem(field, t, g);
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(dense::degree<Fq>(g)); ++d) {
    h = dense::powmod(field, h, field.q(), g);
    FqPoly u = dense::gcd(field, g, dense::sub(field, h, t));
    const int du = dense::degree<Fq>(u);
    if (du > 0) {
      counts[d] += static_cast<unsigned>(du) / d;
      g = dense::quo(field, g, u);
      dense::rem_inplace(field, h, g);
    }
  }
  if (dense::degree<Fq>(g) > 0) ++counts[static_cast<std::size_t>(dense::degree<Fq>(g))];
  return counts;
}

Classification classify(const Fq& field, const MonicPoly& f) {
  const unsigned n = f.degree();
  if (n < 1) throw std::invalid_argument("classify: degree must be >= 1");
  Classification out;
  out.pattern.counts.assign(n, 0);
  const auto parts = squarefree_decompose(field, f);
  out.squarefree = parts.size() == 1 && parts[0].multiplicity == 1;
  for (const auto& part : parts) {
    const auto counts = distinct_degree_counts(field, part.factor);
    for (std::size_t d = 1; d < counts.size(); ++d) out.pattern.counts[d - 1] += counts[d] * part.multiplicity;
  }
  return out;
}

Pattern factor_pattern(const Fq& field, const MonicPoly& f) { return classify(field, f).pattern; }

bool is_squarefree(const Fq& field, const MonicPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_squarefree: degree must be >= 1");
  const FqPoly df = derivative(field, f.dense());
  if (df.empty()) return false;
  return dense::degree<Fq>(dense::gcd(field, f.dense(), df)) == 0;
}

std::uint32_t resultant(const Fq& field, const FqPoly& a_in, const FqPoly& b_in) {
  FqPoly a = a_in;
  FqPoly b = b_in;
  dense::trim(field, a);
  dense::trim(field, b);
  std::uint32_t acc = 1;
  while (true) {
    if (a.empty() || b.empty()) return 0;
    const int m = dense::degree<Fq>(a);
    const int n = dense::degree<Fq>(b);
    if (n == 0) return field.mul(acc, field.pow(b[0], static_cast<std::uint64_t>(m)));
    FqPoly r = dense::rem(field, a, b);
    if (r.empty()) return 0;
    const int k = dense::degree<Fq>(r);
    if ((m * n) % 2 == 1) acc = field.neg(acc);
    acc = field.mul(acc, field.pow(b.back(), static_cast<std::uint64_t>(m - k)));
    a = std::move(b);
    b = std::move(r);
  }
}

std::uint32_t discriminant(const Fq& field, const MonicPoly& f) {
  const unsigned n = f.degree();
  std::uint32_t r = resultant(field, f.dense(), derivative(field, f.dense()));
  if ((static_cast<std::uint64_t>(n) * (n - 1) / 2) % 2 == 1) r = field.neg(r);
  return r;
}

std::uint64_t poly_code(const MonicPoly& f, std::uint32_t q) {
  std::uint64_t v = 0;
  for (unsigned k = f.degree(); k-- > 0;) v = v * q + f.coeff(k);
  return v;
}

MonicPoly poly_from_code(std::uint64_t code, unsigned n, std::uint32_t q) {
  FqPoly d(n + 1, 0);
  for (unsigned k = 0; k < n; ++k) {
    d[k] = static_cast<std::uint32_t>(code % q);
    code /= q;
  }
  d[n] = 1;
  return MonicPoly(std::move(d));
}

std::string to_string(const MonicPoly& f) {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = f.degree() + 1; k-- > 0;) {
    const std::uint32_t c = f.coeff(k);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || k == 0) os << c;
    if (k >= 1) os << (c != 1 ? "*" : "") << "T";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace ffpat
