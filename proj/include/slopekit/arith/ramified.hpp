#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "slopekit/arith/witt.hpp"
#include "slopekit/rational.hpp"

namespace slopekit::arith {

/// x = sum_{j<e} pi^j * comp[j], each component a Witt vector.
struct RamifiedElem {
  boost::container::small_vector<WittVec, 4> comp;

  bool operator==(const RamifiedElem&) const = default;
};

/// W(F_q)[pi] / (pi^N) with pi^e = p and x pi = pi tau(x), tau = sigma^r.
///
/// With r = 0 this is the commutative ring W(F_q)[p^{1/e}]; with e = s the
/// residue degree and gcd(r, s) = 1 it is the maximal order of the division
/// algebra of invariant r/s.
class RamifiedOrder {
 public:
  using Value = RamifiedElem;

  static std::shared_ptr<const RamifiedOrder> make(FieldPtr field, int e, int r, int N);
  /// O_lambda for lambda = r/s over a field of degree s.
  static std::shared_ptr<const RamifiedOrder> division_order(FieldPtr field, Rational lambda,
                                                             int N);

  const FieldPtr& field() const noexcept { return witt_->field(); }
  const WittRing& witt() const noexcept { return *witt_; }
  const WittPtr& witt_ptr() const noexcept { return witt_; }
  int ramification() const noexcept { return e_; }
  int twist() const noexcept { return r_; }
  int precision() const noexcept { return N_; }

  RamifiedElem zero() const;
  RamifiedElem one() const { return from_witt(witt_->one()); }
  RamifiedElem from_int(std::int64_t v) const { return from_witt(witt_->from_int(v)); }
  RamifiedElem from_witt(const WittVec& a) const;
  RamifiedElem uniformizer_power(int k) const;
  RamifiedElem teichmuller(FiniteField::Elem a) const {
    return from_witt(witt_->teichmuller(a));
  }
  bool is_zero(const RamifiedElem& a) const noexcept;

  RamifiedElem add(const RamifiedElem& a, const RamifiedElem& b) const;
  RamifiedElem sub(const RamifiedElem& a, const RamifiedElem& b) const;
  RamifiedElem neg(const RamifiedElem& a) const;
  RamifiedElem mul(const RamifiedElem& a, const RamifiedElem& b) const;
  RamifiedElem pow(const RamifiedElem& a, std::uint64_t e) const;
  RamifiedElem inv(const RamifiedElem& a) const;
  /// Applies sigma^k componentwise (the Frobenius of W(F_q), not tau).
  RamifiedElem sigma(const RamifiedElem& a, int k = 1) const;

  /// Valuation in units of pi, N for zero.
  int valuation_pi(const RamifiedElem& a) const noexcept;
  /// Valuation normalized so that val(p) = 1.
  Rational valuation(const RamifiedElem& a) const {
    return Rational(valuation_pi(a), e_);
  }
  bool is_unit(const RamifiedElem& a) const noexcept { return valuation_pi(a) == 0; }

  /// Teichmuller digits (beta_0, ..., beta_{N-1}) with a = sum pi^k <beta_k>.
  std::vector<FiniteField::Elem> digits(const RamifiedElem& a) const;
  RamifiedElem from_digits(const std::vector<FiniteField::Elem>& digits) const;

  /// Injective 64-bit code of the canonical representative; requires
  /// q^N < 2^64.
  std::uint64_t pack(const RamifiedElem& a) const;
  /// Reduction to precision n <= N (same ring parameters).
  RamifiedElem truncate(const RamifiedElem& a, int n) const;

 private:
  RamifiedOrder(FieldPtr field, int e, int r, int N);

  int comp_precision(int j) const noexcept { return (N_ - j + e_ - 1) / e_; }
  void canonicalize(RamifiedElem& a) const;

  int e_, r_, N_;
  WittPtr witt_;
};

using OrderPtr = std::shared_ptr<const RamifiedOrder>;

}  // namespace slopekit::arith
