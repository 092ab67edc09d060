#ifndef FFPAT_DENSE_POLY_HPP
#define FFPAT_DENSE_POLY_HPP

// Dense univariate polynomial kernels over any field object exposing
// value_type, zero(), one(), is_zero(), add(), sub(), neg(), mul(), inv().
//
// Coefficients are stored low degree first. A trimmed polynomial has a
// nonzero last coefficient; the zero polynomial is the empty vector.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ffpat::dense {

template <class F>
using Poly = std::vector<typename F::value_type>;

template <class F>
void trim(const F& field, Poly<F>& a) {
  while (!a.empty() && field.is_zero(a.back())) a.pop_back();
}

/// Degree of a trimmed polynomial; -1 for zero.
template <class F>
int degree(const Poly<F>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class F>
bool is_one(const F& field, const Poly<F>& a) {
  return a.size() == 1 && a[0] == field.one();
}

template <class F>
Poly<F> add(const F& field, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = field.add(r[i], b[i]);
  trim(field, r);
  return r;
}

template <class F>
Poly<F> sub(const F& field, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = field.sub(r[i], b[i]);
  trim(field, r);
  return r;
}

template <class F>
Poly<F> mul(const F& field, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = field.add(r[i + j], field.mul(a[i], b[j]));
  }
  trim(field, r);
  return r;
}

template <class F>
Poly<F> scale(const F& field, const typename F::value_type& c, const Poly<F>& a) {
  Poly<F> r(a.size(), field.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = field.mul(c, a[i]);
  trim(field, r);
  return r;
}

/// In-place remainder a mod b; b must be nonzero.
template <class F>
void rem_inplace(const F& field, Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const int db = degree<F>(b);
  if (degree<F>(a) < db) return;
  const auto lead_inv = field.inv(b.back());
  for (int k = degree<F>(a); k >= db; --k) {
    const auto c = field.mul(a[k], lead_inv);
    if (field.is_zero(c)) continue;
    for (int t = 0; t <= db; ++t) a[k - db + t] = field.sub(a[k - db + t], field.mul(c, b[t]));
  }
  a.resize(static_cast<std::size_t>(db));
  trim(field, a);
}

template <class F>
Poly<F> rem(const F& field, Poly<F> a, const Poly<F>& b) {
  rem_inplace(field, a, b);
  return a;
}

/// Quotient and remainder.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& field, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const int db = degree<F>(b);
  const int da = degree<F>(a);
  if (da < db) return {Poly<F>{}, std::move(a)};
  Poly<F> quo(static_cast<std::size_t>(da - db + 1), field.zero());
  const auto lead_inv = field.inv(b.back());
  for (int k = da; k >= db; --k) {
    const auto c = field.mul(a[k], lead_inv);
    quo[k - db] = c;
    if (field.is_zero(c)) continue;
    for (int t = 0; t <= db; ++t) a[k - db + t] = field.sub(a[k - db + t], field.mul(c, b[t]));
  }
  a.resize(static_cast<std::size_t>(db));
  trim(field, a);
  trim(field, quo);
  return {std::move(quo), std::move(a)};
}

template <class F>
Poly<F> quo(const F& field, const Poly<F>& a, const Poly<F>& b) {
  return divmod(field, a, b).first;
}

template <class F>
Poly<F> make_monic(const F& field, Poly<F> a) {
  if (a.empty()) return a;
  const auto li = field.inv(a.back());
  for (auto& c : a) c = field.mul(c, li);
  return a;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(const F& field, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    rem_inplace(field, a, b);
    std::swap(a, b);
  }
  return make_monic(field, std::move(a));
}

template <class F>
Poly<F> mulmod(const F& field, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  Poly<F> r = mul(field, a, b);
  rem_inplace(field, r, m);
  return r;
}

template <class F>
Poly<F> powmod(const F& field, Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> result{field.one()};
  rem_inplace(field, result, m);
  rem_inplace(field, base, m);
  while (e > 0) {
    if (e & 1U) result = mulmod(field, result, base, m);
    e >>= 1U;
    if (e > 0) base = mulmod(field, base, base, m);
  }
  return result;
}

template <class F>
typename F::value_type eval(const F& field, const Poly<F>& a, const typename F::value_type& x) {
  auto acc = field.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = field.add(field.mul(acc, x), a[i]);
  return acc;
}

/// The polynomial T as a dense vector.
template <class F>
Poly<F> monomial_t(const F& field) {
  return Poly<F>{field.zero(), field.one()};
}

}  // namespace ffpat::dense

#endif  // FFPAT_DENSE_POLY_HPP
