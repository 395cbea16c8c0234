#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "slopekit/arith/field.hpp"

namespace slopekit::arith {

/// Element of W_m(F_q): coefficients of 1, X, ..., X^{s-1} in Z/p^m.
struct WittVec {
  boost::container::small_vector<std::uint64_t, 6> c;

  bool operator==(const WittVec&) const = default;
};

/// W_m(F_q) realized as (Z/p^m)[X]/(f~), where f~ is the coefficientwise
/// lift of the field modulus. Frobenius is the unique lift sending X to the
/// root of f~ congruent to X^p.
class WittRing {
 public:
  using Value = WittVec;

  static std::shared_ptr<const WittRing> make(FieldPtr field, int m);

  const FieldPtr& field() const noexcept { return field_; }
  const FiniteField& residue() const noexcept { return *field_; }
  int length() const noexcept { return m_; }
  std::uint64_t modulus_int() const noexcept { return pm_; }
  std::uint32_t p() const noexcept { return field_->characteristic(); }
  int degree() const noexcept { return field_->degree(); }

  WittVec zero() const;
  WittVec one() const { return from_int(1); }
  WittVec from_int(std::int64_t v) const;
  WittVec from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  bool is_zero(const WittVec& a) const noexcept;

  WittVec add(const WittVec& a, const WittVec& b) const;
  WittVec sub(const WittVec& a, const WittVec& b) const;
  WittVec neg(const WittVec& a) const;
  WittVec mul(const WittVec& a, const WittVec& b) const;
  WittVec scale(const WittVec& a, std::uint64_t k) const;
  WittVec pow(const WittVec& a, std::uint64_t e) const;
  /// Multiplicative inverse of a unit; throws NotInvertible otherwise.
  WittVec inv(const WittVec& a) const;

  /// p-adic valuation; length() for zero.
  int valuation(const WittVec& a) const noexcept;
  bool is_unit(const WittVec& a) const noexcept { return valuation(a) == 0; }
  /// a * p^k.
  WittVec shift_up(const WittVec& a, int k) const;
  /// a / p^k, requiring valuation >= k. The result is exact mod p^{m-k}.
  WittVec shift_down(const WittVec& a, int k) const;
  /// Coefficientwise reduction mod p^k.
  WittVec truncate(const WittVec& a, int k) const;

  FiniteField::Elem residue_of(const WittVec& a) const;
  WittVec lift(FiniteField::Elem a) const;
  WittVec teichmuller(FiniteField::Elem a) const;
  /// sigma^k, with k taken modulo the residue degree.
  WittVec sigma(const WittVec& a, int k = 1) const;

  /// Teichmuller digits (x_0, ..., x_{m-1}) with a = sum p^j <x_j>.
  std::vector<FiniteField::Elem> digits(const WittVec& a) const;
  WittVec from_digits(const std::vector<FiniteField::Elem>& digits) const;

  /// Same residue field, different length; coefficients reduced or kept.
  std::shared_ptr<const WittRing> with_length(int m) const { return make(field_, m); }

 private:
  WittRing(FieldPtr field, int m);

  WittVec reduce_poly(std::vector<unsigned __int128>& prod) const;
  WittVec apply_sigma_table(const WittVec& a, const std::vector<WittVec>& powers) const;

  FieldPtr field_;
  int m_;
  int s_;
  std::uint64_t pm_;
  std::vector<std::uint64_t> lifted_;
  // sigma_pow_[k][i] = sigma^k(X)^i.
  std::vector<std::vector<WittVec>> sigma_pow_;
  WittVec teich_gen_;
  std::vector<WittVec> teich_table_;
};

using WittPtr = std::shared_ptr<const WittRing>;

}  // namespace slopekit::arith
