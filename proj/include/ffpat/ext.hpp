#ifndef FFPAT_EXT_HPP
#define FFPAT_EXT_HPP

// Extension layers F_{q^i} = F_q[v]/(h_i), Frobenius maps, normal elements
// and the basis matrices A_i[k][h] = sigma^k(theta_i^{q^h}).

#include "ffpat/fq.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <memory>
#include <string>
#include <vector>

namespace ffpat {

inline constexpr unsigned kMaxExtDegree = 32;

/// Coordinates over F_q in the power basis 1, v, ..., v^{deg-1}.
struct ExtElem {
  std::array<std::uint32_t, kMaxExtDegree> c{};
  std::uint8_t deg = 0;

  bool operator==(const ExtElem& o) const {
    if (deg != o.deg) return false;
    for (unsigned k = 0; k < deg; ++k) {
      if (c[k] != o.c[k]) return false;
    }
    return true;
  }
  bool operator<(const ExtElem& o) const;
};

/// Raised when an element that must be fixed by Frobenius is not.
class FrobeniusFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ExtField {
 public:
  using value_type = ExtElem;

  /// modulus: monic irreducible over F_q of degree d, low degree first.
  ExtField(FqPtr base, std::vector<std::uint32_t> modulus);

  unsigned degree() const { return d_; }
  const Fq& base() const { return *base_; }
  const FqPtr& base_ptr() const { return base_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  ExtElem zero() const;
  ExtElem one() const;
  bool is_zero(const ExtElem& a) const;
  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem inv(const ExtElem& a) const;
  ExtElem pow(ExtElem a, std::uint64_t e) const;

  /// a * x for a in F_q.
  ExtElem scale(std::uint32_t a, const ExtElem& x) const;
  /// acc += a * x for a in F_q.
  void axpy(std::uint32_t a, const ExtElem& x, ExtElem& acc) const;

  ExtElem from_base(std::uint32_t a) const;
  /// True iff x lies in F_q, the fixed field of Frobenius.
  bool is_base(const ExtElem& x) const;
  /// Projection of a Frobenius-fixed element onto F_q; throws FrobeniusFault otherwise.
  std::uint32_t to_base(const ExtElem& x) const;

  /// x^{q^k}; k is reduced modulo the degree.
  ExtElem frobenius(const ExtElem& x, unsigned k = 1) const;

  /// The generator v (class of the indeterminate).
  ExtElem generator() const;

  /// Element number `index` in coefficient-tuple order: index = sum c_k q^k.
  ExtElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const ExtElem& x) const;
  /// q^d, or 0 when it does not fit in 64 bits.
  std::uint64_t order() const { return order_; }

  /// Throws std::invalid_argument when x does not belong to this layer.
  void check_member(const ExtElem& x) const;

 private:
  ExtElem reduce(const std::array<std::uint64_t, 2 * kMaxExtDegree>& prod) const;

  FqPtr base_;
  std::vector<std::uint32_t> modulus_;
  unsigned d_ = 0;
  std::uint64_t order_ = 0;
  // frob_[k][j] = (v^j)^{q^k} for 0 <= k < d.
  std::vector<std::vector<ExtElem>> frob_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;
using ExtMatrix = std::vector<std::vector<ExtElem>>;

/// Rank over F_q of the F_q-coordinate vectors of the given elements.
unsigned coordinate_rank(const ExtField& field, const std::vector<ExtElem>& elems);

/// True iff theta, theta^q, ..., theta^{q^{d-1}} form an F_q-basis.
bool is_normal(const ExtField& field, const ExtElem& theta);

/// First normal element in coefficient-tuple scan order.
ExtElem find_normal_element(const ExtField& field);

/// Inverse over the layer by Gauss-Jordan elimination; throws if singular.
ExtMatrix invert(const ExtField& field, const ExtMatrix& m);
ExtMatrix multiply(const ExtField& field, const ExtMatrix& a, const ExtMatrix& b);
/// Rank over the layer.
unsigned rank(const ExtField& field, ExtMatrix m);

/// Layer F_{q^i} with its normal-basis data.
struct ExtCtx {
  unsigned i = 0;
  ExtFieldPtr field;
  ExtElem theta;
  /// a[k][h] = sigma^k(theta^{q^h}).
  ExtMatrix a;
  ExtMatrix a_inv;
};

/// Builds F_{q^i} with the lexicographically smallest h_i and the first normal element.
/// For i = 1 the layer is F_q itself with theta_1 = 1.
ExtCtx make_ext_ctx(const FqPtr& base, unsigned i);

/// Layers F_{q^1}, ..., F_{q^n} over a fixed base field.
class Tower {
 public:
  Tower(FqPtr base, unsigned max_degree);

  const Fq& base() const { return *base_; }
  const FqPtr& base_ptr() const { return base_; }
  unsigned max_degree() const { return static_cast<unsigned>(layers_.size()); }
  const ExtCtx& layer(unsigned i) const;

  /// Replaces layer i; used to inject alternative normal-basis data.
  void replace_layer(ExtCtx ctx);

 private:
  FqPtr base_;
  std::vector<ExtCtx> layers_;
};

/// All roots in `field` of a polynomial over F_q that splits into distinct linear
/// factors there, sorted by element index. Deterministic trace splitting.
std::vector<ExtElem> split_roots(const ExtField& field, const std::vector<std::uint32_t>& f);

/// F_q-embedding of a smaller layer into a larger one, v -> image of v.
class Embedding {
 public:
  Embedding() = default;
  /// Sends the generator of `from` to the smallest root of its modulus in `to`
  /// (the identity when both layers coincide).
  Embedding(const ExtField& from, ExtFieldPtr to);

  ExtElem operator()(const ExtElem& x) const;
  const ExtElem& generator_image() const { return root_; }

 private:
  ExtFieldPtr to_;
  ExtElem root_;
  // powers_[k] = image of v^k.
  std::vector<ExtElem> powers_;
};

std::string to_string(const ExtElem& x);

}  // namespace ffpat

#endif  // FFPAT_EXT_HPP
