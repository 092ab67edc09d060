#include "ffpat/fq.hpp"

#include "ffpat/dense_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ffpat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldParams make_field(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: " + std::to_string(p) + " is not prime");
  if (s < 1) throw std::invalid_argument("make_field: extension exponent must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t k = 0; k < s; ++k) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::invalid_argument("make_field: q exceeds 2^20");
  }
  FieldParams params{p, s, static_cast<std::uint32_t>(q), {}};
  if (s > 1) {
    const Fq prime_field(FieldParams{p, 1, p, {}});
    params.g = find_irreducible(prime_field, s);
  }
  return params;
}

Fq::Fq(FieldParams params) : params_(std::move(params)), q_(params_.q), prime_(params_.s == 1) {
  if (params_.q == 0 || params_.p == 0) throw std::invalid_argument("Fq: uninitialized field parameters");
  if (!prime_ && params_.g.size() != params_.s + 1) {
    throw std::invalid_argument("Fq: modulus degree does not match extension exponent");
  }
  if (prime_) {
    inv_table_.assign(q_, 0);
    if (q_ > 1) inv_table_[1] = 1;
    for (std::uint32_t i = 2; i < q_; ++i) {
      const std::uint64_t r = (static_cast<std::uint64_t>(q_ - q_ / i) * inv_table_[q_ % i]) % q_;
      inv_table_[i] = static_cast<std::uint32_t>(r);
    }
    return;
  }
  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_slow(a, b);
        mul_table_[a * q_ + b] = mul_slow(a, b);
      }
    }
  }
  if (q_ <= (1U << 16U)) {
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = pow_slow(a, q_ - 2);
  }
}

std::vector<std::uint32_t> Fq::digits(value_type a) const {
  std::vector<std::uint32_t> d(params_.s, 0);
  for (std::uint32_t k = 0; k < params_.s; ++k) {
    d[k] = a % params_.p;
    a /= params_.p;
  }
  return d;
}

Fq::value_type Fq::from_digits(const std::vector<std::uint32_t>& d) const {
  value_type v = 0;
  for (std::size_t k = d.size(); k-- > 0;) v = v * params_.p + d[k];
  return v;
}

Fq::value_type Fq::add_slow(value_type a, value_type b) const {
  const std::uint32_t p = params_.p;
  value_type r = 0;
  value_type scale = 1;
  for (std::uint32_t k = 0; k < params_.s; ++k) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Fq::value_type Fq::neg_slow(value_type a) const {
  const std::uint32_t p = params_.p;
  value_type r = 0;
  value_type scale = 1;
  for (std::uint32_t k = 0; k < params_.s; ++k) {
    r += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return r;
}

Fq::value_type Fq::mul_slow(value_type a, value_type b) const {
  const std::uint32_t p = params_.p;
  const std::uint32_t s = params_.s;
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * s - 1, 0);
  for (std::uint32_t i = 0; i < s; ++i) {
    for (std::uint32_t j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p;
  }
  // Reduce with the monic modulus g: u^s = -(g_0 + ... + g_{s-1} u^{s-1}).
  for (std::size_t k = prod.size(); k-- > s;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::uint32_t t = 0; t < s; ++t) {
      prod[k - s + t] = (prod[k - s + t] + (p - params_.g[t]) % p * c) % p;
    }
  }
  value_type r = 0;
  for (std::size_t k = s; k-- > 0;) r = r * p + static_cast<value_type>(prod[k]);
  return r;
}

Fq::value_type Fq::pow_slow(value_type a, std::uint64_t e) const {
  value_type result = 1;
  while (e > 0) {
    if (e & 1U) result = mul_slow(result, a);
    e >>= 1U;
    if (e > 0) a = mul_slow(a, a);
  }
  return result;
}

Fq::value_type Fq::pow(value_type a, std::uint64_t e) const {
  value_type result = 1;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e > 0) a = mul(a, a);
  }
  return result;
}

Fq::value_type Fq::inv(value_type a) const {
  if (a == 0) throw std::domain_error("Fq: inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

Fq::value_type Fq::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(params_.p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<value_type>(r);
}

Fq::value_type Fq::pth_root(value_type a) const {
  std::uint64_t e = 1;
  for (std::uint32_t k = 1; k < params_.s; ++k) e *= params_.p;
  return pow(a, e);
}

std::string Fq::describe() const {
  std::ostringstream os;
  os << "F_" << params_.q;
  if (params_.s > 1) {
    os << " = F_" << params_.p << "[u]/(";
    bool first = true;
    for (std::size_t k = params_.g.size(); k-- > 0;) {
      if (params_.g[k] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (k == 0 || params_.g[k] != 1) os << params_.g[k];
      if (k >= 1) os << "u";
      if (k >= 2) os << "^" << k;
    }
    os << ")";
  }
  return os.str();
}

bool is_irreducible(const Fq& field, const std::vector<std::uint32_t>& f) {
  const int d = dense::degree<Fq>(f);
  if (d < 1 || f.back() != field.one()) throw std::invalid_argument("is_irreducible: expects monic of degree >= 1");
  if (d == 1) return true;
  if (f[0] == 0) return false;
  const auto t = dense::monomial_t(field);
  // frob[k] = T^{q^k} mod f.
  std::vector<std::vector<std::uint32_t>> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = dense::rem(field, t, f);
  for (int k = 1; k <= d; ++k) frob[k] = dense::powmod(field, frob[k - 1], field.q(), f);
  if (dense::sub(field, frob[d], frob[0]).size() != 0) return false;
  int rest = d;
  for (int ell = 2; ell <= rest; ++ell) {
    if (rest % ell != 0) continue;
    while (rest % ell == 0) rest /= ell;
    const auto diff = dense::sub(field, frob[d / ell], frob[0]);
    if (dense::degree<Fq>(dense::gcd(field, f, diff)) != 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(const Fq& field, unsigned d) {
  if (d < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
  const std::uint32_t q = field.q();
  std::vector<std::uint32_t> f(d + 1, 0);
  f[d] = 1;
  // Odometer over (c_{d-1}, ..., c_0) with c_0 the least significant digit.
  while (true) {
    if (is_irreducible(field, f)) return f;
    unsigned k = 0;
    while (k < d) {
      if (++f[k] < q) break;
      f[k] = 0;
      ++k;
    }
    if (k == d) break;
  }
  throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

}  // namespace ffpat
