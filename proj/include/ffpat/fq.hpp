#ifndef FFPAT_FQ_HPP
#define FFPAT_FQ_HPP

// The base field F_q = F_p[u]/(g) with q = p^s <= 2^20.
//
// Elements are encoded as integers 0 <= code < q holding the base-p digits
// of their coordinate vector in the power basis 1, u, ..., u^{s-1} (digit k
// is the coefficient of u^k). Code order is the field-element order used by
// every deterministic scan in the library.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ffpat {

inline constexpr std::uint32_t kMaxFieldOrder = 1U << 20U;

struct FieldParams {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t q = 0;
  /// Monic irreducible of degree s over F_p, low degree first; empty when s == 1.
  std::vector<std::uint32_t> g;

  bool operator==(const FieldParams&) const = default;
};

bool is_prime(std::uint64_t n);

/// Validates (p, s) and fixes g as the lexicographically smallest monic irreducible.
FieldParams make_field(std::uint32_t p, std::uint32_t s);

class Fq {
 public:
  using value_type = std::uint32_t;

  explicit Fq(FieldParams params);

  const FieldParams& params() const { return params_; }
  std::uint32_t p() const { return params_.p; }
  std::uint32_t s() const { return params_.s; }
  std::uint32_t q() const { return params_.q; }
  bool is_prime_field() const { return params_.s == 1; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  static bool is_zero(value_type a) { return a == 0; }

  value_type add(value_type a, value_type b) const {
    if (prime_) {
      const std::uint32_t r = a + b;
      return r >= q_ ? r - q_ : r;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_slow(a, b);
  }

  value_type neg(value_type a) const {
    if (prime_) return a == 0 ? 0 : q_ - a;
    return neg_slow(a);
  }

  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }

  value_type mul(value_type a, value_type b) const {
    if (prime_) return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % q_);
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
  }

  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  value_type from_int(std::int64_t v) const;

  /// Inverse of x -> x^p on F_q, namely a -> a^{p^{s-1}}.
  value_type pth_root(value_type a) const;

  std::vector<std::uint32_t> digits(value_type a) const;
  value_type from_digits(const std::vector<std::uint32_t>& d) const;

  std::string describe() const;

 private:
  value_type add_slow(value_type a, value_type b) const;
  value_type neg_slow(value_type a) const;
  value_type mul_slow(value_type a, value_type b) const;
  value_type pow_slow(value_type a, std::uint64_t e) const;

  FieldParams params_;
  std::uint32_t q_ = 0;
  bool prime_ = true;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

using FqPtr = std::shared_ptr<const Fq>;

inline FqPtr make_fq(std::uint32_t p, std::uint32_t s) { return std::make_shared<const Fq>(make_field(p, s)); }

/// Rabin irreducibility test for a monic polynomial (low degree first) over F_q.
bool is_irreducible(const Fq& field, const std::vector<std::uint32_t>& f);

/// Lexicographically smallest monic irreducible of degree d over F_q.
///
/// Candidates are ordered by the tuple (c_{d-1}, ..., c_0) of non-leading
/// coefficients, constant term last, each compared in element-code order.
std::vector<std::uint32_t> find_irreducible(const Fq& field, unsigned d);

}  // namespace ffpat

#endif  // FFPAT_FQ_HPP
