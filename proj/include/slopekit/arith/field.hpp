#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace slopekit::arith {

/// The finite field F_q, q = p^s, realized as F_p[X]/(modulus).
///
/// Elements are encoded as integers sum_i c_i p^i where c_i is the
/// coefficient of X^i, so 0 and 1 are the additive and multiplicative
/// identities and the prime subfield occupies codes [0, p).
/// Multiplication goes through log/exp tables over a fixed primitive element.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Deterministic field for (p, s, seed). The modulus is the first
  /// irreducible monic polynomial in code order starting at offset
  /// seed mod p^s. Throws InvalidArgument for composite p or q > 2^24.
  static std::shared_ptr<const FiniteField> make(std::uint32_t p, int s,
                                                 std::uint64_t seed = 0);

  /// Field with an explicit modulus (monic, low-to-high coefficients).
  static std::shared_ptr<const FiniteField> with_modulus(
      std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return s_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const noexcept;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// a^{p^k}; negative k is taken modulo the degree.
  Elem frobenius(Elem a, int k) const noexcept;

  Elem generator() const noexcept { return generator_; }
  /// Discrete log base generator(); undefined for 0.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem a) const;

  /// True when a lies in the subfield with p^t elements.
  bool in_subfield(Elem a, int t) const noexcept { return frobenius(a, t) == a; }

  bool operator==(const FiniteField& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  std::string describe() const;

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  int s_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Dense polynomials over a FiniteField, coefficient i of X^i, with no
/// trailing zeros (the zero polynomial is empty).
namespace poly {

using Poly = std::vector<FiniteField::Elem>;

void trim(Poly& f);
int degree(const Poly& f);
Poly add(const FiniteField& k, const Poly& f, const Poly& g);
Poly sub(const FiniteField& k, const Poly& f, const Poly& g);
Poly mul(const FiniteField& k, const Poly& f, const Poly& g);
Poly mod(const FiniteField& k, const Poly& f, const Poly& g);
Poly gcd(const FiniteField& k, Poly f, Poly g);
Poly make_monic(const FiniteField& k, const Poly& f);
Poly powmod(const FiniteField& k, const Poly& base, std::uint64_t e, const Poly& m);
/// base^(Q) mod m where Q = |k|, i.e. the k-Frobenius on k[X]/(m).
Poly frobenius_mod(const FiniteField& k, const Poly& base, const Poly& m);
FiniteField::Elem eval(const FiniteField& k, const Poly& f, FiniteField::Elem x);
/// Ben-Or test over the given field.
bool is_irreducible(const FiniteField& k, const Poly& f);

}  // namespace poly

}  // namespace slopekit::arith
